#include "mpa/serialize.hpp"

#include "mpa/errors.hpp"

#include <algorithm>
#include <sstream>

namespace mpa {

namespace {

std::string at(const std::string& field, const std::string& key) { return field.empty() ? key : field + "." + key; }
std::string at(const std::string& field, std::size_t i) { return field + "[" + std::to_string(i) + "]"; }

const Json& member(const Json& j, const std::string& field, const std::string& key) {
    if (!j.is_object()) throw ParseError(field.empty() ? "<root>" : field, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(at(field, key), "missing");
    return *it;
}

void expect_array(const Json& j, const std::string& field) {
    if (!j.is_array()) throw ParseError(field, "expected an array");
}

int int_from_json(const Json& j, const std::string& field) {
    if (!j.is_number_integer()) throw ParseError(field, "expected an integer");
    return j.get<int>();
}

std::vector<int> ints_from_json(const Json& j, const std::string& field) {
    expect_array(j, field);
    std::vector<int> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(int_from_json(j[i], at(field, i)));
    return out;
}

Json mp_terms(const MPElement& a) {
    Json terms = Json::array();
    for (const auto& [g, c] : a.terms()) terms.push_back({{"edges", to_json(g)["edges"]}, {"coeff", to_json(c)}});
    return terms;
}

}  // namespace

Json to_json(const Rational& r) { return r.to_string(); }

Rational rational_from_json(const Json& j, const std::string& field) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) throw ParseError(field, "expected a rational string");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const ParseError& e) {
        throw ParseError(field, e.what());
    }
}

Json to_json(const Poly& p) {
    Json a = Json::array();
    for (const auto& c : p.coefficients()) a.push_back(to_json(c));
    return a;
}

Poly poly_from_json(const Json& j, const std::string& field) {
    if (!j.is_array()) return Poly(rational_from_json(j, field));
    std::vector<Rational> c;
    for (std::size_t i = 0; i < j.size(); ++i) c.push_back(rational_from_json(j[i], at(field, i)));
    return Poly(std::move(c));
}

Json to_json(const MultisetDiagram& g) {
    Json edges = Json::array();
    for (const auto& e : g.edges()) edges.push_back(Json::array({e.top, e.bottom}));
    return {{"lambda", g.lambda()}, {"edges", edges}};
}

namespace {

MultisetDiagram diagram_from_edges(const std::vector<int>& lambda, const Json& edges, const std::string& field) {
    expect_array(edges, field);
    std::vector<Edge> raw;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto f = at(field, i);
        expect_array(edges[i], f);
        if (edges[i].size() != 2) throw ParseError(f, "an edge is a pair [I, J]");
        Edge e{ints_from_json(edges[i][0], at(f, 0)), ints_from_json(edges[i][1], at(f, 1))};
        if (e.top.size() != lambda.size()) throw ParseError(at(f, 0), "vertex has the wrong number of coordinates");
        if (e.bottom.size() != lambda.size()) throw ParseError(at(f, 1), "vertex has the wrong number of coordinates");
        const bool zero = std::all_of(e.top.begin(), e.top.end(), [](int x) { return x == 0; }) &&
                          std::all_of(e.bottom.begin(), e.bottom.end(), [](int x) { return x == 0; });
        if (zero) throw ParseError(f, "zero edge");
        raw.push_back(std::move(e));
    }
    try {
        return canonicalize(lambda, raw);
    } catch (const MalformedDiagram& e) {
        throw ParseError(field, e.what());
    } catch (const InvalidArgument& e) {
        throw ParseError(field, e.what());
    }
}

}  // namespace

MultisetDiagram multiset_diagram_from_json(const Json& j, const std::string& field) {
    const auto lambda = ints_from_json(member(j, field, "lambda"), at(field, "lambda"));
    return diagram_from_edges(lambda, member(j, field, "edges"), at(field, "edges"));
}

Json to_json(const SetPartitionDiagram& d) { return {{"k", d.k()}, {"blocks", d.blocks()}}; }

SetPartitionDiagram set_partition_from_json(const Json& j, const std::string& field) {
    const int k = int_from_json(member(j, field, "k"), at(field, "k"));
    const auto& blocks = member(j, field, "blocks");
    expect_array(blocks, at(field, "blocks"));
    std::vector<std::vector<int>> b;
    for (std::size_t i = 0; i < blocks.size(); ++i) b.push_back(ints_from_json(blocks[i], at(at(field, "blocks"), i)));
    try {
        return SetPartitionDiagram::from_blocks(k, b);
    } catch (const Error& e) {
        throw ParseError(at(field, "blocks"), e.what());
    }
}

Json to_json(const MPElement& a) { return {{"lambda", a.lambda()}, {"terms", mp_terms(a)}}; }

MPElement mp_element_from_json(const Json& j, const std::optional<std::vector<int>>& lambda, const std::string& field) {
    const Json* terms = &j;
    std::string terms_field = field;
    std::vector<int> lam;
    if (j.is_object()) {
        lam = ints_from_json(member(j, field, "lambda"), at(field, "lambda"));
        if (lambda && *lambda != lam) throw ParseError(at(field, "lambda"), "does not match the requested lambda");
        if (!j.contains("terms")) return MPElement::basis_element(multiset_diagram_from_json(j, field));
        terms = &j["terms"];
        terms_field = at(field, "terms");
    } else {
        if (!lambda) throw ParseError(field.empty() ? "<root>" : field, "a bare term list needs lambda");
        lam = *lambda;
    }
    expect_array(*terms, terms_field);
    MPElement out(lam);
    for (std::size_t i = 0; i < terms->size(); ++i) {
        const auto f = at(terms_field, i);
        const auto& t = (*terms)[i];
        const auto g = diagram_from_edges(lam, member(t, f, "edges"), at(f, "edges"));
        out.add(g, t.contains("coeff") ? poly_from_json(t["coeff"], at(f, "coeff")) : Poly(1));
    }
    return out;
}

Json to_json(const PAElement& a) {
    Json terms = Json::array();
    for (const auto& [d, c] : a.terms()) terms.push_back({{"blocks", d.blocks()}, {"coeff", to_json(c)}});
    return {{"k", a.k()}, {"basis", a.basis() == PABasis::Orbit ? "orbit" : "diagram"}, {"terms", terms}};
}

PAElement pa_element_from_json(const Json& j, const std::string& field) {
    const int k = int_from_json(member(j, field, "k"), at(field, "k"));
    const auto& b = member(j, field, "basis");
    if (!b.is_string() || (b != "orbit" && b != "diagram")) throw ParseError(at(field, "basis"), "expected \"orbit\" or \"diagram\"");
    PAElement out(k, b == "orbit" ? PABasis::Orbit : PABasis::Diagram);
    const auto& terms = member(j, field, "terms");
    expect_array(terms, at(field, "terms"));
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const auto f = at(at(field, "terms"), i);
        Json d{{"k", k}, {"blocks", member(terms[i], f, "blocks")}};
        out.add(set_partition_from_json(d, f), poly_from_json(member(terms[i], f, "coeff"), at(f, "coeff")));
    }
    return out;
}

Json to_json(const Multiset& m) { return m.entries(); }

Multiset multiset_from_json(const Json& j, const std::string& field) {
    auto v = ints_from_json(j, field);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 1) throw ParseError(at(field, i), "symbols are positive integers");
    }
    return Multiset(std::move(v));
}

Json to_json(const IntegerPartition& p) { return p.parts(); }

IntegerPartition partition_from_json(const Json& j, const std::string& field) {
    try {
        return IntegerPartition(ints_from_json(j, field));
    } catch (const InvalidArgument& e) {
        throw ParseError(field, e.what());
    }
}

Json to_json(const MultisetTableau& t) {
    Json rows = Json::array();
    for (const auto& r : t.rows()) {
        Json row = Json::array();
        for (const auto& m : r) row.push_back(to_json(m));
        rows.push_back(row);
    }
    return {{"shape", to_json(t.shape())}, {"rows", rows}};
}

MultisetTableau tableau_from_json(const Json& j, const std::string& field) {
    const auto shape = partition_from_json(member(j, field, "shape"), at(field, "shape"));
    const auto& rows = member(j, field, "rows");
    const auto rf = at(field, "rows");
    expect_array(rows, rf);
    if (rows.size() != shape.length()) throw ParseError(rf, "row count differs from the shape");
    std::vector<std::vector<Multiset>> out;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        expect_array(rows[r], at(rf, r));
        if (static_cast<int>(rows[r].size()) != shape[r]) throw ParseError(at(rf, r), "row length differs from the shape");
        std::vector<Multiset> row;
        for (std::size_t c = 0; c < rows[r].size(); ++c) row.push_back(multiset_from_json(rows[r][c], at(at(rf, r), c)));
        out.push_back(std::move(row));
    }
    return MultisetTableau(shape, std::move(out));
}

Json to_json(const RSKPair& p) { return {{"T", to_json(p.insertion)}, {"S", to_json(p.recording)}}; }

RSKPair rsk_pair_from_json(const Json& j, const std::string& field) {
    return {tableau_from_json(member(j, field, "T"), at(field, "T")), tableau_from_json(member(j, field, "S"), at(field, "S"))};
}

Json to_json(const OperatorMatrix& m) {
    Json basis = Json::array();
    for (const auto& a : m.basis) {
        Json rows = Json::array();
        for (std::size_t r = 0; r < a.rows(); ++r) {
            std::vector<int> row(a.entries().begin() + static_cast<std::ptrdiff_t>(r * a.cols()),
                                 a.entries().begin() + static_cast<std::ptrdiff_t>((r + 1) * a.cols()));
            rows.push_back(row);
        }
        basis.push_back(rows);
    }
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.entries.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.entries.cols(); ++c) row.push_back(to_json(m.entries(r, c)));
        rows.push_back(row);
    }
    return {{"n", m.n}, {"lambda", m.lambda}, {"basis", basis}, {"rows", rows}};
}

OperatorMatrix operator_matrix_from_json(const Json& j, const std::string& field) {
    OperatorMatrix m;
    m.n = int_from_json(member(j, field, "n"), at(field, "n"));
    m.lambda = ints_from_json(member(j, field, "lambda"), at(field, "lambda"));
    const auto& basis = member(j, field, "basis");
    const auto bf = at(field, "basis");
    expect_array(basis, bf);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        expect_array(basis[i], at(bf, i));
        if (basis[i].size() != m.lambda.size()) throw ParseError(at(bf, i), "expected one row per lambda entry");
        std::vector<int> entries;
        for (std::size_t r = 0; r < basis[i].size(); ++r) {
            auto row = ints_from_json(basis[i][r], at(at(bf, i), r));
            if (static_cast<int>(row.size()) != m.n) throw ParseError(at(at(bf, i), r), "expected n columns");
            entries.insert(entries.end(), row.begin(), row.end());
        }
        try {
            m.basis.emplace_back(m.lambda, static_cast<std::size_t>(m.n), std::move(entries));
        } catch (const Error& e) {
            throw ParseError(at(bf, i), e.what());
        }
    }
    const auto& rows = member(j, field, "rows");
    const auto rf = at(field, "rows");
    expect_array(rows, rf);
    if (rows.size() != m.basis.size()) throw ParseError(rf, "row count differs from the basis size");
    m.entries = Matrix(rows.size(), rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        expect_array(rows[r], at(rf, r));
        if (rows[r].size() != rows.size()) throw ParseError(at(rf, r), "matrix is not square");
        for (std::size_t c = 0; c < rows.size(); ++c) m.entries(r, c) = rational_from_json(rows[r][c], at(at(rf, r), c));
    }
    return m;
}

std::string to_csv(const OperatorMatrix& m) {
    std::ostringstream os;
    for (std::size_t r = 0; r < m.entries.rows(); ++r) {
        for (std::size_t c = 0; c < m.entries.cols(); ++c) os << (c ? "," : "") << m.entries(r, c).to_string();
        os << '\n';
    }
    return os.str();
}

Json parse_json_text(const std::string& text, const std::string& field) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(field, std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace mpa
