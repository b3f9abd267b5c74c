#include "nobeling/io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace nobeling::io {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        const std::size_t nl = text.find('\n', start);
        if (nl == std::string_view::npos) {
            lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    for (auto& line : lines) {
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    }
    return lines;
}

std::vector<std::size_t> parse_numbers(std::string_view text, std::size_t line_no) {
    std::vector<std::size_t> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && text[pos] == ' ') ++pos;
        if (pos == text.size()) break;
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
        if (ec != std::errc()) {
            throw ParseError("line " + std::to_string(line_no) + ": expected an integer");
        }
        pos = static_cast<std::size_t>(ptr - text.data());
        if (pos < text.size() && text[pos] != ' ') {
            throw ParseError("line " + std::to_string(line_no) + ": expected an integer");
        }
        out.push_back(value);
    }
    return out;
}

Integer parse_integer(const json& value, const std::string& key) {
    std::string text;
    if (value.is_string()) {
        text = value.get<std::string>();
    } else if (value.is_number_integer()) {
        text = value.dump();
    } else {
        throw ParseError("value for '" + key + "' is not an integer");
    }
    Integer out;
    if (text.empty() || out.set_str(text, 10) != 0) {
        throw ParseError("value for '" + key + "' is not a decimal integer: '" + text + "'");
    }
    return out;
}

std::vector<std::string> string_list(const json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of strings");
    std::vector<std::string> out;
    for (const auto& e : j) {
        if (!e.is_string()) throw ParseError(std::string(what) + " must contain only strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

}  // namespace

std::string write_cube(const CubeSet& s) {
    std::ostringstream os;
    os << "n " << s.dimension() << '\n';
    if (!s.order().is_identity()) {
        os << "order";
        for (std::size_t r : s.order().ranks()) os << ' ' << r;
        os << '\n';
    }
    for (const Point& x : s.points()) os << x.to_string() << '\n';
    return os.str();
}

CubeSet read_cube(std::string_view text) {
    const auto lines = split_lines(text);
    if (lines.empty() || lines[0].substr(0, 2) != "n ") {
        throw ParseError("cube file must start with 'n <count>'");
    }
    const auto header = parse_numbers(lines[0].substr(2), 1);
    if (header.size() != 1) throw ParseError("line 1: expected 'n <count>'");
    const std::size_t n = header[0];
    std::size_t next = 1;
    CoordinateOrder order(n);
    if (next < lines.size() && lines[next].substr(0, 5) == "order") {
        auto ranks = parse_numbers(lines[next].substr(5), next + 1);
        if (ranks.size() != n) {
            throw ParseError("line " + std::to_string(next + 1) + ": order needs " +
                             std::to_string(n) + " ranks");
        }
        try {
            order = CoordinateOrder::from_ranks(std::move(ranks));
        } catch (const ContractError& e) {
            throw ParseError("line " + std::to_string(next + 1) + ": " + e.what());
        }
        ++next;
    }
    std::vector<Point> points;
    for (std::size_t k = next; k < lines.size(); ++k) {
        if (lines[k].size() != n) {
            throw ParseError("line " + std::to_string(k + 1) + ": point '" + std::string(lines[k]) +
                             "' does not have " + std::to_string(n) + " coordinates");
        }
        points.push_back(Point::parse(lines[k]));
    }
    return CubeSet(std::move(order), std::move(points));
}

FunctionOnS read_function(const CubeSet& domain, const json& j) {
    if (!j.is_object()) throw ParseError("function file must be a JSON object");
    std::vector<Integer> values(domain.size());
    std::vector<bool> seen(domain.size(), false);
    for (const auto& [key, value] : j.items()) {
        const Point x = Point::parse(key);
        const auto idx = domain.index_of(x);
        if (x.size() != domain.dimension() || !idx) {
            throw ParseError("function mentions point '" + key + "' outside the space");
        }
        values[*idx] = parse_integer(value, key);
        seen[*idx] = true;
    }
    for (std::size_t k = 0; k < domain.size(); ++k) {
        if (!seen[k]) {
            throw ParseError("function has no value at '" + domain.points()[k].to_string() + "'");
        }
    }
    return FunctionOnS(domain, std::move(values));
}

json function_to_json(const FunctionOnS& f) {
    json out = json::object();
    for (std::size_t k = 0; k < f.domain().size(); ++k) {
        out[f.domain().points()[k].to_string()] = f[k].get_str();
    }
    return out;
}

json product_to_json(const Product& p) {
    json out = json::array();
    for (std::size_t i : p.entries()) out.push_back(i);
    return out;
}

Product product_from_json(const CoordinateOrder& order, const json& j) {
    if (!j.is_array()) throw ParseError("product must be a JSON array");
    std::vector<std::size_t> entries;
    for (const auto& e : j) {
        if (!e.is_number_unsigned()) throw ParseError("product entries must be coordinate indices");
        entries.push_back(e.get<std::size_t>());
    }
    try {
        return Product(order, std::move(entries));
    } catch (const ContractError& e) {
        throw ParseError(e.what());
    }
}

json basis_to_json(const GoodBasis& b) {
    json points = json::array();
    for (const Point& x : b.space.points()) points.push_back(x.to_string());
    json products = json::array();
    for (const Product& p : b.products) products.push_back(product_to_json(p));
    json order = json::array();
    for (std::size_t r : b.order().ranks()) order.push_back(r);
    return json{{"n", b.space.dimension()},
                {"order", order},
                {"points", points},
                {"basis", products},
                {"method", to_string(b.method)}};
}

json decomposition_to_json(const Decomposition& d) {
    json coefficients = json::object();
    for (std::size_t k = 0; k < d.basis.products.size(); ++k) {
        if (d.coefficients[k] == 0) continue;
        coefficients[d.basis.products[k].to_string()] = d.coefficients[k].get_str();
    }
    return json{{"coefficients", coefficients}};
}

json filtration_to_json(const Filtration& f) {
    json stages = json::array();
    for (const auto& st : f.stages) {
        json basis = json::array();
        for (const Product& p : st.basis) basis.push_back(product_to_json(p));
        stages.push_back(json{{"mu", st.mu}, {"size", st.basis.size()}, {"basis", basis}});
    }
    return json{{"stages", stages},
                {"monotone", f.monotone},
                {"new_elements_headed", f.new_elements_headed},
                {"terminal_matches", f.terminal_matches}};
}

json verification_to_json(const CubeSet& s, const VerificationReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) {
        checks.push_back(
            json{{"name", c.name}, {"lemma", c.lemma}, {"pass", c.pass}, {"detail", c.detail}});
    }
    return json{{"seed", r.seed},
                {"n", s.dimension()},
                {"points", s.size()},
                {"checks", checks},
                {"pass", r.pass()}};
}

json stage_report_to_json(const StageReport& r) {
    return json{{"k", r.k},
                {"low_coordinates", r.low_coordinates},
                {"coordinates", r.coordinates},
                {"previous_size", r.previous_size},
                {"current_size", r.current_size},
                {"previous_basis", r.previous_basis},
                {"current_basis", r.current_basis},
                {"projection_matches", r.projection_matches},
                {"basis_included", r.basis_included},
                {"pass", r.pass()}};
}

InverseSystem read_system(const json& j) {
    if (!j.is_object() || !j.contains("stages")) throw ParseError("system needs a 'stages' array");
    InverseSystem sys;
    try {
        for (const auto& st : j.at("stages")) sys.stages.emplace_back(string_list(st, "stage"));
    } catch (const ContractError& e) {
        throw ParseError(e.what());
    }
    if (sys.stages.empty()) throw ParseError("system has no stages");
    const json transitions = j.value("transitions", json::array());
    if (!transitions.is_array() || transitions.size() + 1 != sys.stages.size()) {
        throw ParseError("system needs one transition per stage after the first");
    }
    for (std::size_t k = 1; k < sys.stages.size(); ++k) {
        const json& t = transitions[k - 1];
        if (!t.is_object()) throw ParseError("transition must map child labels to parent labels");
        const auto& child = sys.stages[k];
        const auto& parent = sys.stages[k - 1];
        std::vector<std::size_t> map(child.size(), parent.size());
        for (const auto& [from, to] : t.items()) {
            const auto src = child.index_of(from);
            if (!src || !to.is_string()) throw ParseError("transition entry '" + from + "' is invalid");
            const auto dst = parent.index_of(to.get<std::string>());
            if (!dst) throw ParseError("transition target '" + to.get<std::string>() + "' is unknown");
            map[*src] = *dst;
        }
        for (std::size_t x = 0; x < child.size(); ++x) {
            if (map[x] == parent.size()) {
                throw ParseError("transition " + std::to_string(k) + " does not map '" +
                                 child.elements()[x] + "'");
            }
        }
        sys.transitions.push_back(std::move(map));
    }
    return sys;
}

SpaceInput read_space(const json& j) {
    if (!j.is_object() || !j.contains("elements")) throw ParseError("space needs an 'elements' array");
    try {
        SpaceInput in{FiniteSpace(string_list(j.at("elements"), "elements")), std::nullopt};
        if (j.contains("family")) {
            std::vector<std::vector<std::string>> sets;
            for (const auto& s : j.at("family")) sets.push_back(string_list(s, "family set"));
            in.family = ClopenFamily::from_labels(in.space, sets);
        }
        return in;
    } catch (const ContractError& e) {
        throw ParseError(e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace nobeling::io
