#include "mpa/schur_weyl.hpp"

#include "mpa/errors.hpp"
#include "mpa/parallel.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace mpa {

namespace {

// Column vertex indices of every basis element, so a pair's class is a sort away.
struct Classifier {
    std::vector<int> lambda;
    std::uint32_t nv = 0;
    std::vector<std::vector<std::uint32_t>> columns;

    Classifier(const std::vector<int>& lam, const std::vector<WeakCompositionMatrix>& basis) : lambda(lam) {
        const VertexSpace vs(lam);
        nv = static_cast<std::uint32_t>(vs.size());
        columns.reserve(basis.size());
        for (const auto& m : basis) columns.push_back(column_indices(vs, m));
    }

    static std::vector<std::uint32_t> column_indices(const VertexSpace& vs, const WeakCompositionMatrix& m) {
        std::vector<std::uint32_t> out(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j) out[j] = vs.index(m.column(j));
        return out;
    }

    std::vector<std::uint32_t> codes(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) const {
        std::vector<std::uint32_t> c;
        c.reserve(a.size());
        for (std::size_t j = 0; j < a.size(); ++j) {
            const std::uint32_t code = a[j] * nv + b[j];
            if (code != 0) c.push_back(code);
        }
        std::sort(c.begin(), c.end());
        return c;
    }

    MultisetDiagram of(std::size_t a, std::size_t b) const { return MultisetDiagram::from_codes(lambda, codes(columns[a], columns[b])); }
};

std::vector<WeakCompositionMatrix> capped_basis(int n, const std::vector<int>& lambda, std::size_t cap) {
    if (n < 1) throw InvalidArgument("n must be positive");
    const BigInt dim = count_weak_compositions(n, lambda);
    if (dim > BigInt(static_cast<unsigned long>(cap))) {
        throw ResourceError("dim M(n, lambda) = " + dim.get_str() + " exceeds the cap " + std::to_string(cap));
    }
    return enumerate_weak_compositions(n, lambda);
}

void check_pair(const WeakCompositionMatrix& a, const WeakCompositionMatrix& b) {
    if (a.row_targets() != b.row_targets() || a.cols() != b.cols()) throw InvalidArgument("pair with different n or lambda");
}

}  // namespace

MultisetDiagram orbit_of_pair(const WeakCompositionMatrix& a, const WeakCompositionMatrix& b) {
    check_pair(a, b);
    const VertexSpace vs(a.row_targets());
    const auto nv = static_cast<std::uint32_t>(vs.size());
    std::vector<std::uint32_t> codes;
    for (std::size_t j = 0; j < a.cols(); ++j) codes.push_back(vs.index(a.column(j)) * nv + vs.index(b.column(j)));
    return MultisetDiagram::from_codes(a.row_targets(), std::move(codes));
}

std::pair<WeakCompositionMatrix, WeakCompositionMatrix> representative_pair(const MultisetDiagram& g, int n) {
    if (static_cast<int>(g.rank()) > n) throw InvalidArgument("rank " + std::to_string(g.rank()) + " exceeds n = " + std::to_string(n));
    const std::size_t s = g.lambda().size(), cols = static_cast<std::size_t>(n);
    std::vector<int> a(s * cols, 0), b(s * cols, 0);
    const auto edges = g.edges();
    for (std::size_t j = 0; j < edges.size(); ++j) {
        for (std::size_t i = 0; i < s; ++i) {
            a[i * cols + j] = edges[j].top[i];
            b[i * cols + j] = edges[j].bottom[i];
        }
    }
    return {WeakCompositionMatrix(g.lambda(), cols, std::move(a)), WeakCompositionMatrix(g.lambda(), cols, std::move(b))};
}

OperatorMatrix phi(const MPElement& x, int n, std::size_t cap) {
    OperatorMatrix out;
    out.n = n;
    out.lambda = x.lambda();
    out.basis = capped_basis(n, x.lambda(), cap);
    const std::size_t dim = out.basis.size();
    out.entries = Matrix(dim, dim);
    std::map<std::vector<std::uint32_t>, Rational> values;
    for (const auto& [g, c] : x.terms()) {
        if (static_cast<int>(g.rank()) <= n) values.emplace(g.codes(), eval_poly(c, n));
    }
    if (values.empty()) return out;
    const Classifier cl(out.lambda, out.basis);
    parallel_for(dim, [&](std::size_t a) {
        for (std::size_t b = 0; b < dim; ++b) {
            auto it = values.find(cl.codes(cl.columns[a], cl.columns[b]));
            if (it != values.end()) out.entries(b, a) = it->second;
        }
    });
    return out;
}

OperatorMatrix integral_operator(const MultisetDiagram& g, int n, std::size_t cap) {
    if (static_cast<int>(g.rank()) > n) throw InvalidArgument("rank " + std::to_string(g.rank()) + " exceeds n = " + std::to_string(n));
    return phi(MPElement::basis_element(g), n, cap);
}

std::int64_t count_intermediates(const MultisetDiagram& g1, const MultisetDiagram& g2,
                                 const WeakCompositionMatrix& a, const WeakCompositionMatrix& c) {
    check_pair(a, c);
    if (g1.lambda() != a.row_targets() || g2.lambda() != a.row_targets()) throw InvalidArgument("lambda mismatch");
    const auto basis = enumerate_weak_compositions(static_cast<int>(a.cols()), a.row_targets());
    const Classifier cl(a.row_targets(), basis);
    const VertexSpace vs(a.row_targets());
    const auto ca = Classifier::column_indices(vs, a), cc = Classifier::column_indices(vs, c);
    std::int64_t count = 0;
    for (const auto& cb : cl.columns) {
        if (cl.codes(ca, cb) == g2.codes() && cl.codes(cb, cc) == g1.codes()) ++count;
    }
    return count;
}

std::int64_t brute_force_structure_count(const MultisetDiagram& g1, const MultisetDiagram& g2,
                                         const MultisetDiagram& g, int n) {
    const auto [a, c] = representative_pair(g, n);
    return count_intermediates(g1, g2, a, c);
}

std::map<std::pair<MultisetDiagram, MultisetDiagram>, std::int64_t> structure_counts(const MultisetDiagram& g, int n) {
    const auto [a, c] = representative_pair(g, n);
    const auto basis = enumerate_weak_compositions(n, g.lambda());
    const Classifier cl(g.lambda(), basis);
    const VertexSpace vs(g.lambda());
    const auto ca = Classifier::column_indices(vs, a), cc = Classifier::column_indices(vs, c);
    std::map<std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>, std::int64_t> raw;
    for (const auto& cb : cl.columns) ++raw[{cl.codes(cb, cc), cl.codes(ca, cb)}];
    std::map<std::pair<MultisetDiagram, MultisetDiagram>, std::int64_t> out;
    for (auto& [key, count] : raw) {
        out.emplace(std::pair{MultisetDiagram::from_codes(g.lambda(), key.first), MultisetDiagram::from_codes(g.lambda(), key.second)}, count);
    }
    return out;
}

std::size_t centralizer_dimension(int n, const std::vector<int>& lambda) {
    const auto basis = enumerate_weak_compositions(n, lambda);
    const Classifier cl(lambda, basis);
    std::set<std::vector<std::uint32_t>> classes;
    for (const auto& a : cl.columns) {
        for (const auto& b : cl.columns) classes.insert(cl.codes(a, b));
    }
    return classes.size();
}

namespace {

// Index of sigma(A) for every basis element A, where sigma moves column j to column perm[j].
std::vector<std::size_t> permutation_action(const std::vector<WeakCompositionMatrix>& basis, const std::vector<std::size_t>& perm) {
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i].entries(), i);
    std::vector<std::size_t> out(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const auto& m = basis[i];
        std::vector<int> moved(m.entries().size());
        for (std::size_t r = 0; r < m.rows(); ++r) {
            for (std::size_t j = 0; j < m.cols(); ++j) moved[r * m.cols() + perm[j]] = m.at(r, j);
        }
        out[i] = index.at(moved);
    }
    return out;
}

std::vector<std::vector<std::size_t>> generator_actions(const std::vector<WeakCompositionMatrix>& basis, int n) {
    std::vector<std::vector<std::size_t>> out;
    if (n < 2) return out;
    std::vector<std::size_t> swap(static_cast<std::size_t>(n)), cycle(static_cast<std::size_t>(n));
    std::iota(swap.begin(), swap.end(), 0);
    std::swap(swap[0], swap[1]);
    for (std::size_t j = 0; j < cycle.size(); ++j) cycle[j] = (j + 1) % cycle.size();
    out.push_back(permutation_action(basis, swap));
    out.push_back(permutation_action(basis, cycle));
    return out;
}

}  // namespace

bool commutant_check(const OperatorMatrix& m, GeneratorSet generators) {
    const std::size_t dim = m.basis.size();
    for (const auto& act : generator_actions(m.basis, m.n)) {
        for (std::size_t a = 0; a < dim; ++a) {
            for (std::size_t b = 0; b < dim; ++b) {
                if (m.entries(act[b], act[a]) != m.entries(b, a)) return false;
            }
        }
    }
    if (generators == GeneratorSet::Monomial) {
        auto profile = [&](std::size_t i) {
            std::vector<int> p(m.basis[i].cols());
            for (std::size_t j = 0; j < p.size(); ++j) p[j] = m.basis[i].column_sum(j);
            return p;
        };
        for (std::size_t a = 0; a < dim; ++a) {
            const auto pa = profile(a);
            for (std::size_t b = 0; b < dim; ++b) {
                if (!m.entries(b, a).is_zero() && profile(b) != pa) return false;
            }
        }
    }
    return true;
}

std::size_t commutant_dimension(int n, const std::vector<int>& lambda, std::size_t cap) {
    const auto basis = capped_basis(n, lambda, cap);
    const std::size_t dim = basis.size();
    const auto actions = generator_actions(basis, n);
    // Unknown X(b, a) is variable b * dim + a; one equation X(sb, sa) - X(b, a) = 0 per generator and entry.
    Matrix eq(actions.size() * dim * dim, dim * dim);
    std::size_t row = 0;
    for (const auto& act : actions) {
        for (std::size_t b = 0; b < dim; ++b) {
            for (std::size_t a = 0; a < dim; ++a, ++row) {
                const std::size_t lhs = act[b] * dim + act[a], rhs = b * dim + a;
                if (lhs == rhs) continue;
                eq(row, lhs) = Rational(1);
                eq(row, rhs) = Rational(-1);
            }
        }
    }
    return dim * dim - rank(std::move(eq));
}

std::size_t integral_operator_span_rank(int n, const std::vector<int>& lambda, std::size_t cap) {
    std::vector<std::vector<Rational>> vectors;
    for (const auto& g : enumerate_basis(lambda)) {
        if (static_cast<int>(g.rank()) <= n) vectors.push_back(integral_operator(g, n, cap).entries.flat());
    }
    return span_rank(vectors);
}

}  // namespace mpa
