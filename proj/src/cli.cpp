#include "nobeling/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "nobeling/basis.hpp"
#include "nobeling/checks.hpp"
#include "nobeling/io.hpp"
#include "nobeling/profinite.hpp"

namespace nobeling::cli {

namespace {

using io::json;

struct RunConfig {
    std::string input;
    std::string function;
    std::string order;
    std::string method = "both";
    std::string format = "table";
    std::string out;
    std::uint64_t seed = 0;
    std::size_t max_n = Caps{}.max_n;
    std::size_t max_points = Caps{}.max_points;
    bool inject_fault = false;
    std::string example;
    std::vector<std::string> params;

    Caps caps() const {
        Caps c;
        c.max_n = max_n;
        c.max_points = max_points;
        return c;
    }
};

CubeSet load_space(const RunConfig& cfg) {
    CubeSet s = io::read_cube(io::read_file(cfg.input));
    if (cfg.order.empty()) return s;
    std::vector<std::size_t> ranks;
    std::istringstream in(cfg.order);
    std::string token;
    while (in >> token) {
        try {
            std::size_t used = 0;
            ranks.push_back(std::stoul(token, &used));
            if (used != token.size()) throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw ParseError("--order: '" + token + "' is not a rank");
        }
    }
    if (ranks.size() != s.dimension()) {
        throw ParseError("--order needs " + std::to_string(s.dimension()) + " ranks");
    }
    CoordinateOrder order;
    try {
        order = CoordinateOrder::from_ranks(std::move(ranks));
    } catch (const ContractError& e) {
        throw ParseError(std::string("--order: ") + e.what());
    }
    return CubeSet(std::move(order), std::vector<Point>(s.points().begin(), s.points().end()));
}

// Output goes to --out when given.
class Sink {
public:
    Sink(const RunConfig& cfg, std::ostream& fallback) : path_(cfg.out), fallback_(fallback) {}
    ~Sink() = default;

    std::ostream& stream() { return path_.empty() ? fallback_ : buffer_; }

    void flush() {
        if (path_.empty()) return;
        std::ofstream file(path_, std::ios::binary);
        if (!file) throw ParseError("cannot write '" + path_ + "'");
        file << buffer_.str();
    }

private:
    std::string path_;
    std::ostream& fallback_;
    std::ostringstream buffer_;
};

void print_products(std::ostream& os, const std::vector<Product>& products) {
    for (const Product& p : products) os << p.to_string() << '\n';
}

struct BasisOutcome {
    GoodBasis basis;
    std::optional<bool> agree;
    std::vector<Product> only_greedy, only_recursive;
};

BasisOutcome compute(const CubeSet& s, const RunConfig& cfg) {
    const Caps caps = cfg.caps();
    if (cfg.method == "greedy") return {good_products_greedy(s, caps), std::nullopt, {}, {}};
    if (cfg.method == "recursive") return {good_products_recursive(s, caps), std::nullopt, {}, {}};
    BasisOutcome out{good_products_greedy(s, caps), true, {}, {}};
    const GoodBasis rec = good_products_recursive(s, caps);
    for (const Product& p : out.basis.products) {
        if (!rec.contains(p)) out.only_greedy.push_back(p);
    }
    for (const Product& p : rec.products) {
        if (!out.basis.contains(p)) out.only_recursive.push_back(p);
    }
    out.agree = out.basis.products == rec.products;
    return out;
}

int cmd_basis(const RunConfig& cfg, std::ostream& out) {
    const CubeSet s = load_space(cfg);
    const BasisOutcome r = compute(s, cfg);
    Sink sink(cfg, out);
    auto& os = sink.stream();
    if (cfg.format == "json") {
        json j = io::basis_to_json(r.basis);
        if (r.agree) j["algorithms_agree"] = *r.agree;
        os << j.dump() << '\n';
    } else {
        os << "|S| = " << s.size() << ", |E(S)| = " << r.basis.products.size()
           << ", method = " << cfg.method << '\n';
        print_products(os, r.basis.products);
        if (r.agree && *r.agree) os << "ALGORITHMS AGREE\n";
        if (r.agree && !*r.agree) {
            os << "ALGORITHMS DISAGREE\n";
            for (const auto& p : r.only_greedy) os << "  greedy only: " << p.to_string() << '\n';
            for (const auto& p : r.only_recursive) os << "  recursive only: " << p.to_string() << '\n';
        }
    }
    sink.flush();
    return r.agree.value_or(true) ? kOk : kInvariant;
}

int cmd_decompose(const RunConfig& cfg, std::ostream& out) {
    const CubeSet s = load_space(cfg);
    if (cfg.function.empty()) throw ParseError("decompose needs --function");
    const FunctionOnS f = io::read_function(s, io::parse_json(io::read_file(cfg.function)));
    const BasisOutcome r = compute(s, cfg);
    if (r.agree && !*r.agree) throw InvariantError("greedy and recursive bases differ");
    const Decomposition d = decompose(r.basis, f);
    Sink sink(cfg, out);
    auto& os = sink.stream();
    if (cfg.format == "json") {
        os << io::decomposition_to_json(d).dump() << '\n';
    } else {
        for (std::size_t k = 0; k < d.basis.products.size(); ++k) {
            if (d.coefficients[k] == 0) continue;
            os << d.coefficients[k].get_str() << " * " << d.basis.products[k].to_string() << '\n';
        }
    }
    sink.flush();
    return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    const CubeSet s = load_space(cfg);
    VerifyOptions opts;
    opts.seed = cfg.seed;
    opts.caps = cfg.caps();
    opts.inject_fault = cfg.inject_fault;
    const VerificationReport report = run_verification(s, opts);
    Sink sink(cfg, out);
    auto& os = sink.stream();
    if (cfg.format == "json") {
        os << io::verification_to_json(s, report).dump(2) << '\n';
    } else {
        os << "seed " << report.seed << ", n = " << s.dimension() << ", |S| = " << s.size() << '\n';
        for (const auto& c : report.checks) {
            os << (c.pass ? "PASS " : "FAIL ") << c.name << " [" << c.lemma << "]";
            if (!c.detail.empty()) os << "  " << c.detail;
            os << '\n';
        }
        os << (report.pass() ? "ALL CHECKS PASS" : "CHECKS FAILED") << '\n';
    }
    sink.flush();
    return report.pass() ? kOk : kInvariant;
}

int cmd_embed(const RunConfig& cfg, std::ostream& out) {
    const json j = io::parse_json(io::read_file(cfg.input));
    const Caps caps = cfg.caps();
    FiniteSpace space;
    ClopenFamily family;
    json stages = json::array();
    bool consistent = true;
    if (j.contains("stages")) {
        const InverseSystem sys = io::read_system(j);
        const std::size_t last = sys.stages.size() - 1;
        space = sys.stages[last];
        family = tower_families(sys, last, caps).back();
        for (std::size_t k = 1; k <= last; ++k) {
            const StageReport r = stage_consistency(sys, k, caps);
            consistent = consistent && r.pass();
            stages.push_back(io::stage_report_to_json(r));
        }
    } else {
        const io::SpaceInput in = io::read_space(j);
        space = in.space;
        family = in.family ? *in.family : default_family(space, caps);
    }
    const Embedding e = clopen_embedding(space, family);
    Sink sink(cfg, out);
    auto& os = sink.stream();
    if (cfg.format == "json") {
        json map = json::object();
        for (std::size_t x = 0; x < space.size(); ++x) {
            map[space.elements()[x]] = e.points[x].to_string();
        }
        json doc{{"cube", io::write_cube(e.image)}, {"map", map}};
        if (!stages.empty()) doc["stages"] = stages;
        os << doc.dump(2) << '\n';
    } else {
        os << io::write_cube(e.image);
    }
    sink.flush();
    return consistent ? kOk : kInvariant;
}

int cmd_gen(const RunConfig& cfg, std::ostream& out) {
    const CubeSet s = generate_example(cfg.example, cfg.params, cfg.seed, cfg.caps());
    Sink sink(cfg, out);
    sink.stream() << io::write_cube(s);
    sink.flush();
    return kOk;
}

int cmd_filtration(const RunConfig& cfg, std::ostream& out) {
    const CubeSet s = load_space(cfg);
    const Method method = cfg.method == "greedy" ? Method::greedy : Method::recursive;
    const Filtration f = prefix_filtration(s, method, cfg.caps());
    Sink sink(cfg, out);
    auto& os = sink.stream();
    if (cfg.format == "json") {
        os << io::filtration_to_json(f).dump() << '\n';
    } else {
        for (const auto& st : f.stages) {
            os << "mu = " << st.mu << ", |E| = " << st.basis.size() << ':';
            for (const auto& p : st.basis) os << ' ' << p.to_string();
            os << '\n';
        }
        os << (f.pass() ? "FILTRATION OK" : "FILTRATION FAILED") << '\n';
    }
    sink.flush();
    return f.pass() ? kOk : kInvariant;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Computes and verifies good-product bases of C(S, Z) for finite subsets S of {0,1}^n"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&cfg](CLI::App* sub, bool needs_input) {
        auto* opt = sub->add_option("--input", cfg.input, "Input file");
        if (needs_input) opt->required();
        sub->add_option("--order", cfg.order, "Coordinate ranks, e.g. \"1 0 2\"");
        sub->add_option("--format", cfg.format, "Output format")
            ->check(CLI::IsMember({"table", "json"}));
        sub->add_option("--seed", cfg.seed, "Seed for every random choice");
        sub->add_option("--max-n", cfg.max_n, "Largest cube dimension")->check(CLI::PositiveNumber);
        sub->add_option("--max-points", cfg.max_points, "Largest space")->check(CLI::PositiveNumber);
        sub->add_option("--out", cfg.out, "Write output to a file");
    };
    auto add_method = [&cfg](CLI::App* sub) {
        sub->add_option("--method", cfg.method, "Basis algorithm")
            ->check(CLI::IsMember({"greedy", "recursive", "both"}));
    };

    auto* basis = app.add_subcommand("basis", "Print the good products E(S)");
    add_common(basis, true);
    add_method(basis);

    auto* dec = app.add_subcommand("decompose", "Write a function in the good-product basis");
    add_common(dec, true);
    add_method(dec);
    dec->add_option("--function", cfg.function, "JSON object of point -> integer")->required();

    auto* verify = app.add_subcommand("verify", "Run every structural check on a space");
    add_common(verify, true);
    verify->add_flag("--inject-fault", cfg.inject_fault)->group("");

    auto* embed = app.add_subcommand("embed", "Embed a finite space or inverse system into a cube");
    add_common(embed, true);

    auto* gen = app.add_subcommand("gen", "Generate an example space");
    add_common(gen, false);
    gen->add_option("name", cfg.example, "full_cube | cantor_truncation | diagonal | padic | "
                                         "random_closed | random_points")
        ->required();
    gen->add_option("params", cfg.params, "Example parameters");

    auto* filtration = app.add_subcommand("filtration", "Good products of every prefix projection");
    add_common(filtration, true);
    add_method(filtration);

    std::vector<std::string> reversed(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(reversed.begin(), reversed.end());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream msg;
        const int code = app.exit(e, out, msg);
        err << msg.str();
        return code == 0 ? kOk : kParse;
    }

    try {
        if (basis->parsed()) return cmd_basis(cfg, out);
        if (dec->parsed()) return cmd_decompose(cfg, out);
        if (verify->parsed()) return cmd_verify(cfg, out);
        if (embed->parsed()) return cmd_embed(cfg, out);
        if (gen->parsed()) return cmd_gen(cfg, out);
        if (filtration->parsed()) return cmd_filtration(cfg, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kParse;
    } catch (const ContractError& e) {
        err << "invalid input: " << e.what() << '\n';
        return kParse;
    } catch (const ResourceError& e) {
        err << "resource limit: " << e.what() << '\n';
        return kResource;
    } catch (const InvariantError& e) {
        err << "invariant failure: " << e.what() << '\n';
        return kInvariant;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kFailure;
    }
    return kFailure;
}

}  // namespace nobeling::cli
