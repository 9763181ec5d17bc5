#include "diagramalg_cli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "diagramalg/diagramalg.hpp"
#include "serialize.hpp"
#include "verify.hpp"

namespace diagramalg::cli {

namespace {

// Bad flag values that CLI11 cannot see, such as an unknown family name.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string family;
    int k = 0;
    std::string n;
    std::string lhs, rhs, diagram;
    std::string lambda_star, kappa;
    int s = -1;
    int m = -1;
    std::string basis = "twisted";
    std::string format = "text";
    std::string method = "formula";
    std::string suite;
    std::string out;
    bool factor = false;
};

Family parse_family(const std::string& name) {
    auto f = family_from_name(name);
    if (!f) throw UsageError("unknown family '" + name + "'");
    return *f;
}

std::optional<Rational> parse_n(const std::string& text) {
    if (text.empty()) return std::nullopt;
    try {
        return parse_rational(text);
    } catch (const Error&) {
        throw UsageError("--n expects an integer or p/q, got '" + text + "'");
    }
}

IntPartition parse_label(const std::string& text, const char* flag) {
    try {
        return parse_partition(text);
    } catch (const Error&) {
        throw UsageError(std::string(flag) + " expects a partition such as [2,1], got '" + text + "'");
    }
}

std::string coeff_text(const LaurentPoly& c, const std::optional<Rational>& n) {
    return n ? to_string(evaluate(c, *n)) : to_string(c);
}

json coeff_json(const LaurentPoly& c, const std::optional<Rational>& n) {
    return n ? to_json(LaurentPoly(evaluate(c, *n))) : to_json(c);
}

std::string cmd_mul(const Options& o) {
    const Family f = parse_family(o.family);
    const Element a(parse_diagram(o.lhs, o.k), f), b(parse_diagram(o.rhs, o.k), f);
    const Element ab = a * b;
    const auto n = parse_n(o.n);
    if (o.format == "json") {
        json out = json::array();
        for (const auto& [d, c] : ab.terms()) out.push_back({{"coeff", coeff_json(c, n)}, {"diagram", to_json(d)}});
        return out.dump() + "\n";
    }
    std::ostringstream out;
    for (const auto& [d, c] : ab.terms()) out << coeff_text(c, n) << " * " << format_diagram(d) << '\n';
    return out.str();
}

std::string cmd_basis(const Options& o) {
    const auto basis = enumerate_basis(parse_family(o.family), o.k);
    if (o.format == "json") {
        json out = json::array();
        for (const auto& d : basis) out.push_back(to_json(d));
        return out.dump() + "\n";
    }
    std::ostringstream out;
    for (const auto& d : basis) out << format_diagram(d) << '\n';
    return out.str();
}

std::string cmd_dims(const Options& o) {
    const Family f = parse_family(o.family);
    const auto labels = index_set(f, o.k);
    std::optional<std::vector<IntPartition>> with_n;
    if (const auto n = parse_n(o.n)) {
        if (n->get_den() != 1 || !n->get_num().fits_slong_p()) throw UsageError("dims needs an integer --n");
        with_n = index_set(f, o.k, n->get_num().get_si());
    }
    Integer total = 0;
    json rows = json::array();
    std::ostringstream text;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const Integer dim = irrep_dimension(f, o.k, labels[i]);
        total += dim * dim;
        json row = {{"lambda_star", to_json(labels[i])}, {"dim", integer_json(dim)}};
        text << "lambda*=" << to_string(labels[i]);
        if (with_n) {
            row["lambda"] = to_json((*with_n)[i]);
            text << " lambda=" << to_string((*with_n)[i]);
        }
        text << " dim=" << to_string(dim) << '\n';
        rows.push_back(row);
    }
    if (o.format == "json") {
        json out = {{"family", std::string(family_name(f))}, {"k", o.k}, {"labels", rows},
                    {"sum_of_squares", integer_json(total)}};
        return out.dump() + "\n";
    }
    text << "sum of squares=" << to_string(total) << '\n';
    return text.str();
}

std::string cmd_symdiag(const Options& o) {
    const auto& ws = enumerate_symmetric(parse_family(o.family), o.k, o.m);
    if (o.format == "json") {
        json out = json::array();
        for (const auto& w : ws) out.push_back(to_json(w));
        return out.dump() + "\n";
    }
    std::ostringstream out;
    for (const auto& w : ws) out << format_diagram(w.to_diagram()) << '\n';
    return out.str();
}

std::string cmd_sspt(const Options& o) {
    const auto all = enumerate_sspt(parse_family(o.family), o.k, parse_label(o.lambda_star, "--lambda-star"));
    if (o.format == "json") {
        json out = json::array();
        for (const auto& T : all) out.push_back(to_json(T));
        return out.dump() + "\n";
    }
    std::ostringstream out;
    for (const auto& T : all) out << to_string(T) << '\n';
    return out.str();
}

std::string cmd_irrep(const Options& o) {
    const Family f = parse_family(o.family);
    const BasisChoice basis = o.basis == "tableau" ? BasisChoice::Tableau : BasisChoice::Twisted;
    const IrreducibleModule mod(f, o.k, parse_label(o.lambda_star, "--lambda-star"), basis);
    const LaurentMatrix m = mod.matrix(parse_diagram(o.diagram, o.k));
    const auto n = parse_n(o.n);
    if (o.format == "json") {
        json rows = json::array();
        for (const auto& row : m) {
            json r = json::array();
            for (const auto& x : row) r.push_back(coeff_json(x, n));
            rows.push_back(r);
        }
        return json{{"dimension", mod.dimension()}, {"basis", o.basis}, {"matrix", rows}}.dump() + "\n";
    }
    std::ostringstream out;
    for (const auto& row : m) {
        out << '[';
        for (std::size_t j = 0; j < row.size(); ++j) out << (j ? ", " : "") << coeff_text(row[j], n);
        out << "]\n";
    }
    return out.str();
}

std::string cmd_char(const Options& o) {
    const Family f = parse_family(o.family);
    const IntPartition ls = parse_label(o.lambda_star, "--lambda-star");
    const IntPartition kappa = parse_label(o.kappa, "--kappa");
    int s = o.s;
    if (s < 0) {
        const int step = (f == Family::Brauer || f == Family::TemperleyLieb) ? 2 : 1;
        const int rest = o.k - kappa.size();
        if (rest < 0 || rest % step) throw Error(ErrorCode::InvalidClassLabel, "no s makes kappa a class of this k");
        s = rest / step;
    }
    const ClassLabel label{kappa, s, f};
    std::string value;
    json jvalue;
    if (o.method == "oracle") {
        const LaurentPoly trace = character_oracle(f, o.k, ls, label);
        value = to_string(trace);
        jvalue = to_json(trace);
    } else {
        const Integer chi = irr_character(f, o.k, ls, label);
        value = to_string(chi);
        jvalue = integer_json(chi);
    }
    if (o.format == "json") {
        json out = {{"family", std::string(family_name(f))}, {"k", o.k},           {"lambda_star", to_json(ls)},
                    {"kappa", to_json(kappa)},                {"s", s},              {"method", o.method},
                    {"value", jvalue}};
        return out.dump() + "\n";
    }
    return value + "\n";
}

std::vector<std::string> labels_of(const std::vector<IntPartition>& ps) {
    std::vector<std::string> out;
    for (const auto& p : ps) out.push_back(to_string(p));
    return out;
}

std::string text_matrix(const std::vector<std::string>& rows, const std::vector<std::string>& cols,
                        const IntegerMatrix& m) {
    std::vector<std::vector<std::string>> cells;
    for (const auto& row : m) {
        cells.emplace_back();
        for (const auto& x : row) cells.back().push_back(to_string(x));
    }
    return to_text(rows, cols, cells);
}

std::string cmd_table(const Options& o) {
    const Family f = parse_family(o.family);
    const CharacterTable t = character_table(f, o.k);
    std::optional<TableFactorization> factor;
    if (o.factor) factor = factor_table(f, o.k);
    const auto rows = labels_of(t.rows);
    std::vector<std::string> cols;
    for (const auto& c : t.cols) cols.push_back(class_name(c));
    if (o.format == "json") {
        json out = to_json(t);
        if (factor) out["factor"] = to_json(*factor);
        return out.dump() + "\n";
    }
    const auto render = [&](const std::vector<std::string>& r, const std::vector<std::string>& c,
                            const IntegerMatrix& m) {
        return o.format == "csv" ? to_csv(r, c, m) : text_matrix(r, c, m);
    };
    std::string out = render(rows, cols, t.values);
    if (factor) {
        const auto mus = labels_of(factor->labels);
        out += "\n" + render(rows, mus, factor->block);
        out += "\n" + render(mus, cols, factor->f);
    }
    return out;
}

std::string cmd_verify(const Options& o, bool& ok) {
    const Family f = parse_family(o.family);
    const VerifyReport r = run_suite(o.suite, f, o.k);
    ok = r.ok;
    if (o.format == "json") {
        json out = {{"suite", o.suite}, {"family", std::string(family_name(f))}, {"k", o.k},
                    {"ok", r.ok},       {"details", r.details}};
        return out.dump() + "\n";
    }
    std::ostringstream out;
    out << (r.ok ? "OK" : "FAIL") << ' ' << o.suite << ' ' << family_name(f) << " k=" << o.k << '\n';
    for (const auto& d : r.details) out << "  " << d << '\n';
    return out.str();
}

std::vector<std::string> family_choices() {
    std::vector<std::string> out;
    for (Family f : all_families()) out.emplace_back(family_name(f));
    return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Diagram algebras: products, irreducible modules and character tables", "diagramalg"};
    app.require_subcommand(1);
    Options o;

    const auto families = family_choices();
    auto common = [&](CLI::App* sub, bool needs_k = true) {
        sub->add_option("--family", o.family, "Algebra family: " + CLI::detail::join(families, ", "))->required();
        auto* k = sub->add_option("--k", o.k, "Number of vertices per row")->check(CLI::Range(1, 127));
        if (needs_k) k->required();
        sub->add_option("--out", o.out, "Write output to this file instead of stdout");
    };
    auto with_format = [&](CLI::App* sub, std::vector<std::string> formats) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
    };

    auto* mul = app.add_subcommand("mul", "Multiply two diagrams");
    common(mul);
    mul->add_option("--lhs", o.lhs, "Left diagram, e.g. \"1 2' | 2 1'\"")->required();
    mul->add_option("--rhs", o.rhs, "Right diagram")->required();
    mul->add_option("--n", o.n, "Evaluate at this parameter value (default: symbolic)");
    with_format(mul, {"text", "json"});

    auto* basis = app.add_subcommand("basis", "List the diagram basis");
    common(basis);
    with_format(basis, {"text", "json"});

    auto* dims = app.add_subcommand("dims", "Dimensions of the irreducible modules");
    common(dims);
    dims->add_option("--n", o.n, "Label modules by partitions of this n (needs n >= 2k)");
    with_format(dims, {"text", "json"});

    auto* symdiag = app.add_subcommand("symdiag", "List symmetric m-diagrams");
    common(symdiag);
    symdiag->add_option("--m", o.m, "Number of propagating blocks")->required();
    with_format(symdiag, {"text", "json"});

    auto* sspt = app.add_subcommand("sspt", "List standard set-partition tableaux");
    common(sspt);
    sspt->add_option("--lambda-star", o.lambda_star, "Module label, e.g. [2,1]")->required();
    with_format(sspt, {"text", "json"});

    auto* irrep = app.add_subcommand("irrep", "Matrix of a diagram on an irreducible module");
    common(irrep);
    irrep->add_option("--lambda-star", o.lambda_star, "Module label")->required();
    irrep->add_option("--diagram", o.diagram, "Acting diagram")->required();
    irrep->add_option("--basis", o.basis, "Basis: twisted or tableau")
        ->check(CLI::IsMember({"twisted", "tableau"}));
    irrep->add_option("--n", o.n, "Evaluate at this parameter value");
    with_format(irrep, {"text", "json"});

    auto* chr = app.add_subcommand("char", "Irreducible character value");
    common(chr);
    chr->add_option("--lambda-star", o.lambda_star, "Module label")->required();
    chr->add_option("--kappa", o.kappa, "Cycle type of the class")->required();
    chr->add_option("--s", o.s, "Number of rank-lowering factors (default: from k and kappa)")
        ->check(CLI::NonNegativeNumber);
    chr->add_option("--method", o.method, "formula or oracle (trace of the representation)")
        ->check(CLI::IsMember({"formula", "oracle"}));
    with_format(chr, {"text", "json"});

    auto* table = app.add_subcommand("table", "Character table");
    common(table);
    table->add_flag("--factor", o.factor, "Also print the symmetric-group block factor and F");
    with_format(table, {"text", "csv", "json"});

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    common(verify);
    verify->add_option("--suite", o.suite, "Suite: " + CLI::detail::join(suite_names(), ", "))
        ->required()
        ->check(CLI::IsMember(suite_names()));
    with_format(verify, {"text", "json"});

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        bool ok = true;
        std::string text;
        if (*mul) text = cmd_mul(o);
        else if (*basis) text = cmd_basis(o);
        else if (*dims) text = cmd_dims(o);
        else if (*symdiag) text = cmd_symdiag(o);
        else if (*sspt) text = cmd_sspt(o);
        else if (*irrep) text = cmd_irrep(o);
        else if (*chr) text = cmd_char(o);
        else if (*table) text = cmd_table(o);
        else text = cmd_verify(o, ok);
        if (o.out.empty()) {
            out << text;
        } else {
            std::ofstream file(o.out);
            if (!file || !(file << text)) {
                err << "error: cannot write " << o.out << '\n';
                return 1;
            }
        }
        return ok ? 0 : 1;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace diagramalg::cli
