#include "cli.hpp"

#include "mpa/errors.hpp"
#include "mpa/multiset_algebra.hpp"
#include "mpa/parallel.hpp"
#include "mpa/rsk.hpp"
#include "mpa/schur_weyl.hpp"
#include "mpa/serialize.hpp"
#include "mpa/symmetric_functions.hpp"
#include "mpa/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace mpa::cli {

namespace {

enum class Format { Json, Text, Csv };

struct Settings {
    std::string format = "json";
    unsigned threads = 0;
    std::size_t max_dim = kDefaultMatrixCap;
    std::size_t max_count = 1000000;
};

class Usage : public Error {
public:
    using Error::Error;
};

std::vector<int> parse_int_list(const std::string& text, const std::string& field) {
    std::vector<int> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size() || v < 0) throw ParseError(field, "expected comma-separated non-negative integers, got '" + text + "'");
        out.push_back(v);
    }
    return out;
}

IntegerPartition parse_partition(const std::string& text, const std::string& field) {
    auto parts = parse_int_list(text, field);
    if (!std::is_sorted(parts.rbegin(), parts.rend())) throw ParseError(field, "partition parts must be weakly decreasing");
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return IntegerPartition(parts);
}

// "@path" reads the file; anything else is inline JSON.
Json load_json(const std::string& value, const std::string& field) {
    if (!value.empty() && value.front() == '@') {
        std::ifstream in(value.substr(1));
        if (!in) throw ParseError(field, "cannot read file '" + value.substr(1) + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        return parse_json_text(buf.str(), field);
    }
    return parse_json_text(value, field);
}

Json count(std::uint64_t v) { return std::to_string(v); }
Json count(const BigInt& v) { return v.get_str(); }

Json partition_json(const IntegerPartition& p) { return to_json(p); }

std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s : std::string(w - s.size(), ' ') + s; }

// Aligned columns; the first row is the header.
void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& r : rows) {
        width.resize(std::max(width.size(), r.size()));
        for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
    }
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "  " : "") << pad(r[i], width[i]);
        out << '\n';
    }
}

void print_csv(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i) {
            const bool quote = r[i].find(',') != std::string::npos;
            out << (i ? "," : "") << (quote ? "\"" + r[i] + "\"" : r[i]);
        }
        out << '\n';
    }
}

struct Output {
    Json json;
    std::function<void(std::ostream&)> text;
    std::vector<std::vector<std::string>> table;  // used by csv, and by text when `text` is empty
    int exit_code = 0;
};

void emit(std::ostream& out, Format f, const Output& o) {
    switch (f) {
        case Format::Json:
            out << o.json.dump() << '\n';
            break;
        case Format::Text:
            if (o.text) o.text(out);
            else if (!o.table.empty()) print_table(out, o.table);
            else out << o.json.dump() << '\n';
            break;
        case Format::Csv:
            if (o.table.empty()) throw Usage("csv output is not available for this command");
            print_csv(out, o.table);
            break;
    }
}

// "(2,0,0)", rows separated by '|'.
std::string matrix_label(const WeakCompositionMatrix& m) {
    std::string s = "(";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) s += (c ? "," : r ? "|" : "") + std::to_string(m.at(r, c));
    }
    return s + ")";
}

std::string element_text(const MPElement& a) { return a.is_zero() ? "0" : a.to_string(); }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Multiset partition algebra toolkit", "mpa"};
    app.require_subcommand(1);
    app.fallthrough();
    Settings settings;
    app.add_option("--format", settings.format, "json, text or csv")->check(CLI::IsMember({"json", "text", "csv"}));
    app.add_option("--threads", settings.threads, "worker threads (default: MPA_THREADS or all cores)");
    app.add_option("--max-dim", settings.max_dim, "largest matrix dimension built");
    app.add_option("--max-count", settings.max_count, "largest enumeration emitted");

    std::function<Output()> action;
    std::string lambda_text, n_text;
    int n = 0;

    // basis
    auto* basis_cmd = app.add_subcommand("basis", "list the classes of B~_lambda");
    bool balanced_only = false;
    std::optional<int> basis_n;
    basis_cmd->add_option("--lambda", lambda_text, "e.g. 2,1")->required();
    basis_cmd->add_option("--n", basis_n, "keep only classes of rank <= n");
    basis_cmd->add_flag("--balanced", balanced_only, "keep only balanced classes");
    basis_cmd->callback([&] {
        action = [&] {
            const auto lam = parse_int_list(lambda_text, "--lambda");
            auto classes = enumerate_basis(lam);
            std::erase_if(classes, [&](const MultisetDiagram& g) {
                return (balanced_only && !is_balanced(g)) || (basis_n && static_cast<int>(g.rank()) > *basis_n);
            });
            if (classes.size() > settings.max_count) throw ResourceError(std::to_string(classes.size()) + " classes exceed --max-count");
            Output o;
            o.json = {{"lambda", lam}, {"count", count(classes.size())}, {"basis", Json::array()}};
            o.table.push_back({"rank", "class"});
            for (const auto& g : classes) {
                o.json["basis"].push_back(to_json(g));
                o.table.push_back({std::to_string(g.rank()), g.to_string()});
            }
            return o;
        };
    });

    // mul
    auto* mul_cmd = app.add_subcommand("mul", "multiply two elements (multiset partition or partition algebra)");
    std::string a_text, b_text;
    std::optional<int> mul_n;
    mul_cmd->add_option("--lambda", lambda_text, "needed when the operands are bare term lists");
    mul_cmd->add_option("--a", a_text, "JSON element, diagram or @file")->required();
    mul_cmd->add_option("--b", b_text, "JSON element, diagram or @file")->required();
    mul_cmd->add_option("--n", mul_n, "also evaluate the coefficients at xi = n");
    mul_cmd->callback([&] {
        action = [&] {
            const Json ja = load_json(a_text, "a"), jb = load_json(b_text, "b");
            Output o;
            if (ja.is_object() && ja.contains("k")) {
                const auto a = pa_element_from_json(ja, "a"), b = pa_element_from_json(jb, "b");
                if (a.basis() != b.basis()) throw InvalidArgument("operands are in different bases");
                PAElement p = a.basis() == PABasis::Diagram ? multiply_diagram_basis(a, b) : multiply_orbit_basis(a, b);
                if (mul_n) {
                    PAElement v(p.k(), p.basis());
                    for (const auto& [d, c] : p.terms()) v.add(d, Poly(eval_poly(c, *mul_n)));
                    p = v;
                }
                o.json = to_json(p);
                o.text = [p](std::ostream& s) { s << (p.is_zero() ? "0" : p.to_string()) << '\n'; };
                return o;
            }
            std::optional<std::vector<int>> lam;
            if (!lambda_text.empty()) lam = parse_int_list(lambda_text, "--lambda");
            const auto a = mp_element_from_json(ja, lam, "a"), b = mp_element_from_json(jb, lam, "b");
            MPElement p = multiply(a, b);
            if (mul_n) {
                MPElement v(p.lambda());
                for (const auto& [g, c] : p.terms()) v.add(g, Poly(eval_poly(c, *mul_n)));
                p = v;
            }
            o.json = to_json(p);
            o.text = [p](std::ostream& s) { s << element_text(p) << '\n'; };
            return o;
        };
    });

    // structure-poly
    auto* sp_cmd = app.add_subcommand("structure-poly", "coefficient of [g] in [g1][g2], optionally against the brute-force count");
    std::string g1_text, g2_text, g_text;
    std::optional<int> sp_n;
    sp_cmd->add_option("--g1", g1_text)->required();
    sp_cmd->add_option("--g2", g2_text)->required();
    sp_cmd->add_option("--g", g_text)->required();
    sp_cmd->add_option("--n", sp_n, "evaluate at xi = n and count intermediates in M(n, lambda)");
    sp_cmd->callback([&] {
        action = [&] {
            const auto g1 = multiset_diagram_from_json(load_json(g1_text, "g1"), "g1");
            const auto g2 = multiset_diagram_from_json(load_json(g2_text, "g2"), "g2");
            const auto g = multiset_diagram_from_json(load_json(g_text, "g"), "g");
            if (g1.lambda() != g2.lambda() || g.lambda() != g1.lambda()) throw InvalidArgument("diagrams have different lambda");
            const Poly c = structure_poly(g1, g2, g);
            Output o;
            o.json = {{"g1", to_json(g1)}, {"g2", to_json(g2)}, {"g", to_json(g)}, {"coeff", to_json(c)}};
            std::string text = c.to_string() + '\n';
            if (sp_n) {
                const Rational v = eval_poly(c, *sp_n);
                o.json["n"] = *sp_n;
                o.json["value"] = to_json(v);
                text += "at n=" + std::to_string(*sp_n) + ": " + v.to_string();
                const auto top = std::max({g.rank(), g1.rank(), g2.rank()});
                if (static_cast<int>(top) <= *sp_n) {
                    const auto brute = brute_force_structure_count(g1, g2, g, *sp_n);
                    o.json["brute_force"] = count(static_cast<std::uint64_t>(brute));
                    o.json["agrees"] = v == Rational(static_cast<long>(brute));
                    text += ", brute force " + std::to_string(brute);
                    if (v != Rational(static_cast<long>(brute))) o.exit_code = 1;
                }
                text += '\n';
            }
            o.text = [text](std::ostream& s) { s << text; };
            return o;
        };
    });

    // embed
    auto* embed_cmd = app.add_subcommand("embed", "image in the orbit basis of P_k(xi)");
    embed_cmd->add_option("--lambda", lambda_text);
    embed_cmd->add_option("--a", a_text, "JSON element, diagram or @file")->required();
    embed_cmd->callback([&] {
        action = [&] {
            std::optional<std::vector<int>> lam;
            if (!lambda_text.empty()) lam = parse_int_list(lambda_text, "--lambda");
            const auto p = embed(mp_element_from_json(load_json(a_text, "a"), lam, "a"));
            Output o;
            o.json = to_json(p);
            o.text = [p](std::ostream& s) { s << (p.is_zero() ? "0" : p.to_string()) << '\n'; };
            return o;
        };
    });

    // idempotent
    auto* idem_cmd = app.add_subcommand("idempotent", "the idempotent e of P_k(xi) for lambda");
    idem_cmd->add_option("--lambda", lambda_text)->required();
    idem_cmd->callback([&] {
        action = [&] {
            const auto e = idempotent_e(parse_int_list(lambda_text, "--lambda"));
            Output o;
            o.json = to_json(e);
            o.text = [e](std::ostream& s) { s << e.to_string() << '\n'; };
            return o;
        };
    });

    // phi
    auto* phi_cmd = app.add_subcommand("phi", "matrix of an element acting on F[M(n, lambda)]");
    bool dense_csv = false;
    phi_cmd->add_option("--lambda", lambda_text);
    phi_cmd->add_option("--a", a_text, "JSON element, diagram or @file")->required();
    phi_cmd->add_option("--n", n)->required();
    phi_cmd->add_flag("--dense-csv", dense_csv, "plain CSV of the entries");
    phi_cmd->callback([&] {
        action = [&] {
            std::optional<std::vector<int>> lam;
            if (!lambda_text.empty()) lam = parse_int_list(lambda_text, "--lambda");
            const auto m = phi(mp_element_from_json(load_json(a_text, "a"), lam, "a"), n, settings.max_dim);
            Output o;
            o.json = to_json(m);
            const std::string csv = to_csv(m);
            if (dense_csv) {
                o.text = [csv](std::ostream& s) { s << csv; };
                return o;
            }
            std::vector<std::string> header{"row"};
            for (std::size_t a = 0; a < m.basis.size(); ++a) header.push_back(std::to_string(a));
            o.table.push_back(header);
            for (std::size_t b = 0; b < m.basis.size(); ++b) {
                std::vector<std::string> row{matrix_label(m.basis[b])};
                for (std::size_t a = 0; a < m.basis.size(); ++a) row.push_back(m.entries(b, a).to_string());
                o.table.push_back(row);
            }
            return o;
        };
    });

    // duality-check
    auto* dual_cmd = app.add_subcommand("duality-check", "phi homomorphism, kernel and centralizer dimension at one n");
    dual_cmd->add_option("--lambda", lambda_text)->required();
    dual_cmd->add_option("--n", n)->required();
    dual_cmd->callback([&] {
        action = [&] {
            const auto lam = parse_int_list(lambda_text, "--lambda");
            const auto classes = enumerate_basis(lam);
            std::vector<Matrix> images;
            std::vector<std::vector<Rational>> flat;
            for (const auto& g : classes) {
                images.push_back(phi(MPElement::basis_element(g), n, settings.max_dim).entries);
                flat.push_back(images.back().flat());
            }
            bool hom = true;
            for (std::size_t i = 0; i < classes.size() && hom; ++i) {
                for (std::size_t j = 0; j < classes.size() && hom; ++j) {
                    hom = phi(multiply_basis(classes[i], classes[j]), n, settings.max_dim).entries == images[i] * images[j];
                }
            }
            const auto above = static_cast<std::size_t>(std::count_if(classes.begin(), classes.end(), [&](const auto& g) { return static_cast<int>(g.rank()) > n; }));
            const std::size_t span = span_rank(flat);
            const std::size_t cd = centralizer_dimension(n, lam);
            const bool kernel_ok = classes.size() - span == above;
            const bool holds = hom && kernel_ok && span == cd;
            Output o;
            o.json = {{"lambda", lam}, {"n", n}, {"basis_size", count(classes.size())}, {"rank_above_n", count(above)},
                      {"span_dimension", count(span)}, {"kernel_dimension", count(classes.size() - span)},
                      {"centralizer_dimension", count(cd)}, {"homomorphism", hom}, {"holds", holds}};
            o.exit_code = holds ? 0 : 1;
            o.table = {{"quantity", "value"},
                       {"basis size", std::to_string(classes.size())},
                       {"classes of rank > n", std::to_string(above)},
                       {"span dimension", std::to_string(span)},
                       {"kernel dimension", std::to_string(classes.size() - span)},
                       {"centralizer dimension", std::to_string(cd)},
                       {"homomorphism", hom ? "yes" : "no"},
                       {"holds", holds ? "yes" : "no"}};
            return o;
        };
    });

    // centralizer-dim
    auto* cent_cmd = app.add_subcommand("centralizer-dim", "number of S_n orbits on M(n, lambda)^2");
    cent_cmd->add_option("--lambda", lambda_text)->required();
    cent_cmd->add_option("--n", n)->required();
    cent_cmd->callback([&] {
        action = [&] {
            const auto lam = parse_int_list(lambda_text, "--lambda");
            const auto d = centralizer_dimension(n, lam);
            Output o;
            o.json = {{"lambda", lam}, {"n", n}, {"dimension", count(d)}};
            o.table = {{"n", "lambda", "dimension"}, {std::to_string(n), join(lam), std::to_string(d)}};
            return o;
        };
    });

    // a-coeff
    auto* a_cmd = app.add_subcommand("a-coeff", "multiplicity of the S_n irreducible V_nu in F[M(n, lambda)]");
    std::vector<std::string> lambda_list;
    std::string nu_text, method = "ssmt";
    bool as_table = false;
    a_cmd->add_option("--lambda", lambda_list, "repeatable; with --as-table a single lambda expands to all partitions of |lambda|")->required();
    a_cmd->add_option("--n", n)->required();
    a_cmd->add_option("--nu", nu_text, "a single nu instead of all nu |- n");
    a_cmd->add_option("--method", method)->check(CLI::IsMember({"ssmt", "plethysm"}));
    a_cmd->add_flag("--as-table", as_table, "nu x lambda matrix");
    a_cmd->callback([&] {
        action = [&] {
            std::vector<std::vector<int>> lams;
            for (const auto& t : lambda_list) lams.push_back(parse_int_list(t, "--lambda"));
            std::vector<IntegerPartition> nus = nu_text.empty() ? enumerate_partitions(n) : std::vector<IntegerPartition>{parse_partition(nu_text, "--nu")};
            for (const auto& nu : nus) {
                if (static_cast<int>(nu.size()) != n) throw ParseError("--nu", "nu must be a partition of n");
            }
            auto a_of = [&](const IntegerPartition& nu, const std::vector<int>& lam) {
                return method == "ssmt" ? a_coeff_ssmt(nu, lam) : a_coeff_plethysm(nu, lam);
            };
            Output o;
            if (as_table) {
                if (lams.size() == 1) {
                    const int m = std::accumulate(lams[0].begin(), lams[0].end(), 0);
                    lams.clear();
                    for (const auto& p : enumerate_partitions(m)) lams.push_back(p.parts());
                }
                o.json = {{"n", n}, {"columns", lams}, {"rows", Json::array()}};
                std::vector<std::string> header{"nu"};
                for (const auto& l : lams) header.push_back("(" + join(l) + ")");
                o.table.push_back(header);
                for (const auto& nu : nus) {
                    Json row = Json::array();
                    std::vector<std::string> line{nu.to_string()};
                    for (const auto& l : lams) {
                        const auto a = a_of(nu, l);
                        row.push_back(std::to_string(a));
                        line.push_back(std::to_string(a));
                    }
                    o.json["rows"].push_back({{"nu", partition_json(nu)}, {"a", row}});
                    o.table.push_back(line);
                }
                return o;
            }
            if (lams.size() != 1) throw Usage("several --lambda values need --as-table");
            const auto& lam = lams[0];
            BigInt dim = 0;
            o.json = {{"lambda", lam}, {"n", n}, {"rows", Json::array()}};
            o.table.push_back({"nu", "a", "dim V_nu"});
            for (const auto& nu : nus) {
                const auto a = a_of(nu, lam);
                const BigInt f = count_syt(nu);
                dim += f * a;
                o.json["rows"].push_back({{"nu", partition_json(nu)}, {"a", std::to_string(a)}, {"dim", count(f)}});
                o.table.push_back({nu.to_string(), std::to_string(a), f.get_str()});
            }
            if (nu_text.empty()) {
                o.json["dimension"] = count(dim);
                o.json["expected_dimension"] = count(count_weak_compositions(n, lam));
            }
            return o;
        };
    });

    // lambda-set
    auto* ls_cmd = app.add_subcommand("lambda-set", "{nu |- n : b(nu) <= k}");
    int k = 0;
    ls_cmd->add_option("--k", k)->required();
    ls_cmd->add_option("--n", n)->required();
    ls_cmd->callback([&] {
        action = [&] {
            const auto set = lambda_set(k, n);
            Output o;
            o.json = {{"k", k}, {"n", n}, {"partitions", Json::array()}};
            o.table.push_back({"nu", "b(nu)"});
            for (const auto& nu : set) {
                o.json["partitions"].push_back(partition_json(nu));
                o.table.push_back({nu.to_string(), std::to_string(nu.b_statistic())});
            }
            return o;
        };
    });

    // r-coeff
    auto* r_cmd = app.add_subcommand("r-coeff", "multiplicity of V_nu in the restriction of the GL_n module lambda to S_n");
    bool with_oracle = false;
    r_cmd->add_option("--lambda", lambda_text, "a partition with at most n parts")->required();
    r_cmd->add_option("--n", n)->required();
    r_cmd->add_option("--nu", nu_text);
    r_cmd->add_flag("--oracle", with_oracle, "compare against the character-theoretic value");
    r_cmd->callback([&] {
        action = [&] {
            const auto lam = parse_partition(lambda_text, "--lambda");
            std::vector<IntegerPartition> nus = nu_text.empty() ? enumerate_partitions(n) : std::vector<IntegerPartition>{parse_partition(nu_text, "--nu")};
            Output o;
            o.json = {{"lambda", partition_json(lam)}, {"n", n}, {"rows", Json::array()}};
            o.table.push_back(with_oracle ? std::vector<std::string>{"nu", "r", "oracle"} : std::vector<std::string>{"nu", "r"});
            for (const auto& nu : nus) {
                if (static_cast<int>(nu.size()) != n) throw ParseError("--nu", "nu must be a partition of n");
                const auto r = r_coeff(lam, nu);
                Json row = {{"nu", partition_json(nu)}, {"r", std::to_string(r)}};
                std::vector<std::string> line{nu.to_string(), std::to_string(r)};
                if (with_oracle) {
                    const auto c = r_coeff_character_oracle(lam, nu);
                    row["oracle"] = std::to_string(c);
                    line.push_back(std::to_string(c));
                    if (c != r) o.exit_code = 1;
                }
                o.json["rows"].push_back(row);
                o.table.push_back(line);
            }
            return o;
        };
    });

    // rsk
    auto* rsk_cmd = app.add_subcommand("rsk", "RSK for multiset partitions, or its inverse");
    std::string partition_text, pair_text;
    bool invert = false;
    rsk_cmd->add_option("--lambda", lambda_text);
    rsk_cmd->add_option("--n", n);
    rsk_cmd->add_option("--partition", partition_text, "diagram JSON, or the {T,S} pair with --invert");
    rsk_cmd->add_option("--pair", pair_text, "{T,S} JSON for --invert");
    rsk_cmd->add_flag("--invert", invert);
    rsk_cmd->callback([&] {
        action = [&] {
            Output o;
            if (invert) {
                const std::string& src = pair_text.empty() ? partition_text : pair_text;
                if (src.empty()) throw Usage("rsk --invert needs --pair");
                if (lambda_text.empty()) throw Usage("rsk --invert needs --lambda");
                const auto p = rsk_pair_from_json(load_json(src, "pair"), "pair");
                const auto d = inverse_rsk(p.insertion, p.recording, parse_int_list(lambda_text, "--lambda"));
                o.json = to_json(d);
                o.text = [d](std::ostream& s) { s << d.to_string() << '\n'; };
                return o;
            }
            if (partition_text.empty()) throw Usage("rsk needs --partition");
            const auto d = multiset_diagram_from_json(load_json(partition_text, "partition"), "partition");
            if (!lambda_text.empty() && parse_int_list(lambda_text, "--lambda") != d.lambda()) throw InvalidArgument("--lambda differs from the diagram's lambda");
            const int cols = rsk_cmd->count("--n") ? n : static_cast<int>(d.rank());
            const auto p = rsk(to_biword(d, cols));
            o.json = to_json(p);
            o.text = [p](std::ostream& s) { s << "T = " << p.insertion.to_string() << "\nS = " << p.recording.to_string() << '\n'; };
            return o;
        };
    });

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run the acceptance batteries");
    std::string suite = "all", scale = "desk";
    std::uint64_t seed = 1;
    verify_cmd->add_option("--suite", suite, "all, or comma-separated criterion names or numbers");
    verify_cmd->add_option("--max-size", scale)->check(CLI::IsMember({"smoke", "desk"}));
    verify_cmd->add_option("--seed", seed);
    verify_cmd->callback([&] {
        action = [&] {
            VerifyOptions opt;
            opt.scale = scale == "desk" ? VerifyScale::Desk : VerifyScale::Smoke;
            opt.seed = seed;
            if (suite != "all") {
                std::stringstream ss(suite);
                std::string item;
                while (std::getline(ss, item, ',')) {
                    try {
                        opt.criteria.push_back(criterion_id(item));
                    } catch (const InvalidArgument& e) {
                        throw ParseError("--suite", e.what());
                    }
                }
            }
            const auto results = run_acceptance(opt);
            Output o;
            o.json = {{"seed", seed}, {"max_size", scale}, {"criteria", Json::array()}};
            bool all = true;
            o.table.push_back({"id", "criterion", "result", "checks", "failures", "seconds"});
            std::ostringstream notes;
            for (const auto& r : results) {
                all = all && r.passed();
                Json row = {{"id", r.id}, {"name", r.name}, {"passed", r.passed()}, {"checks", count(r.checks)}, {"failures", count(r.failures)}};
                if (!r.passed()) {
                    row["first_failure"] = r.first_failure;
                    notes << "criterion " << r.id << ": " << r.first_failure << '\n';
                }
                o.json["criteria"].push_back(row);
                std::ostringstream secs;
                secs << std::fixed << std::setprecision(2) << r.seconds;
                o.table.push_back({std::to_string(r.id), r.name, r.passed() ? "PASS" : "FAIL", std::to_string(r.checks), std::to_string(r.failures), secs.str()});
            }
            o.json["passed"] = all;
            o.exit_code = all ? 0 : 1;
            const auto table = o.table;
            const std::string extra = notes.str();
            o.text = [table, extra](std::ostream& s) {
                print_table(s, table);
                s << extra;
            };
            return o;
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << '\n';
        return 2;
    }
    if (!action) {
        err << "error: no subcommand\n";
        return 2;
    }
    try {
        if (settings.threads > 0) set_worker_count(settings.threads);
        const Format f = settings.format == "json" ? Format::Json : settings.format == "text" ? Format::Text : Format::Csv;
        Output o = action();
        Format use = f;
        if (dense_csv) use = Format::Text;  // the csv was already placed in the text printer
        emit(out, use, o);
        return o.exit_code;
    } catch (const ParseError& e) {
        err << "error: invalid input: " << e.what() << '\n';
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
    }
    return 2;
}

}  // namespace mpa::cli
