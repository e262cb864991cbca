#include "mpa/verify.hpp"

#include "mpa/errors.hpp"
#include "mpa/multiset_algebra.hpp"
#include "mpa/parallel.hpp"
#include "mpa/partition_algebra.hpp"
#include "mpa/rsk.hpp"
#include "mpa/schur_weyl.hpp"
#include "mpa/symmetric_functions.hpp"

#include <algorithm>
#include <chrono>
#include <mutex>
#include <numeric>
#include <random>
#include <set>

namespace mpa {

const std::vector<std::string>& criterion_names() {
    static const std::vector<std::string> names{
        "worked-examples", "structure-oracle", "schur-weyl", "embedding", "orbit-basis",
        "multiplicities", "restriction", "rsk", "balanced"};
    return names;
}

int criterion_id(const std::string& name) {
    const auto& names = criterion_names();
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (name == names[i] || name == std::to_string(i + 1)) return static_cast<int>(i + 1);
    }
    throw InvalidArgument("unknown criterion '" + name + "'");
}

namespace {

using Lambdas = std::vector<std::vector<int>>;

class Checker {
public:
    explicit Checker(CriterionResult& r) : r_(r) {}

    template <class Msg>
    void check(bool ok, Msg&& msg) {
        std::lock_guard lock(mutex_);
        ++r_.checks;
        if (!ok) {
            if (r_.failures++ == 0) r_.first_failure = msg();
        }
    }

    /// Runs body; an exception counts as one failed check.
    template <class Body>
    void guarded(const std::string& what, Body&& body) {
        try {
            body();
        } catch (const std::exception& e) {
            check(false, [&] { return what + ": " + e.what(); });
        }
    }

private:
    CriterionResult& r_;
    std::mutex mutex_;
};

MultisetDiagram one_part(std::vector<std::pair<int, int>> edges, int k) {
    std::vector<Edge> raw;
    for (auto [a, b] : edges) raw.push_back({{a}, {b}});
    return canonicalize({k}, raw);
}

int total(const std::vector<int>& lambda) { return std::accumulate(lambda.begin(), lambda.end(), 0); }

bool desk(const VerifyOptions& o) { return o.scale == VerifyScale::Desk; }

// 1. Worked examples.
void worked_examples(Checker& c, const VerifyOptions&) {
    c.guarded("k=2 product", [&] {
        const auto g = one_part({{0, 1}, {1, 0}, {1, 1}}, 2);
        MPElement expect = MPElement::basis_element(g, Poly::xi_plus(-2));
        expect.add(one_part({{1, 1}, {1, 1}}, 2), Poly::xi_plus(-2) * Rational(2));
        expect.add(one_part({{0, 1}, {0, 1}, {1, 0}, {1, 0}}, 2), Poly(4));
        const auto got = multiply_basis(g, g);
        c.check(got == expect, [&] { return "k=2 product gave " + got.to_string(); });
        std::size_t configs = 0;
        for (const auto& [cls, list] : path_configurations(g, g, 4)) configs += list.size();
        c.check(configs == 4, [&] { return "k=2 example has " + std::to_string(configs) + " configurations"; });
    });
    c.guarded("k=5 diagram product", [&] {
        const auto d2 = SetPartitionDiagram::from_blocks(5, {{1, 2, -1}, {3, 5}, {-2, -3}, {-4}, {4, -5}});
        const auto d1 = SetPartitionDiagram::from_blocks(5, {{1, -1}, {2}, {3}, {4}, {-2, -3}, {5, -4, -5}});
        const auto prod = multiply_diagram_basis(PAElement::basis_element(d1, PABasis::Diagram), PAElement::basis_element(d2, PABasis::Diagram));
        const auto expect = PAElement::basis_element(SetPartitionDiagram::from_blocks(5, {{1, 2, -1}, {3, 5}, {4, -4, -5}, {-2, -3}}),
                                                     PABasis::Diagram, Poly::xi_power(2));
        c.check(prod == expect, [&] { return "k=5 product gave " + prod.to_string(); });
    });
    c.guarded("integral operator", [&] {
        const auto t = integral_operator(one_part({{0, 1}, {2, 1}}, 2), 3);
        auto row = [](std::vector<int> v) { return WeakCompositionMatrix({2}, 3, std::move(v)); };
        auto idx = [&](const WeakCompositionMatrix& a) { return static_cast<std::size_t>(std::find(t.basis.begin(), t.basis.end(), a) - t.basis.begin()); };
        const auto a = idx(row({2, 0, 0})), z = idx(row({1, 1, 0}));
        for (std::size_t b = 0; b < t.basis.size(); ++b) {
            const bool one = t.basis[b] == row({1, 1, 0}) || t.basis[b] == row({1, 0, 1});
            c.check(t.entries(b, a) == Rational(one ? 1 : 0), [&] { return "T(1_(2,0,0)) wrong at row " + std::to_string(b); });
            c.check(t.entries(b, z).is_zero(), [&] { return "T(1_(1,1,0)) not zero at row " + std::to_string(b); });
        }
    });
    c.guarded("rsk example", [&] {
        const auto d = canonicalize({2, 2, 1}, {{{1, 1, 0}, {0, 0, 0}}, {{0, 0, 0}, {1, 1, 0}}, {{1, 0, 1}, {1, 0, 0}}, {{0, 1, 0}, {0, 1, 0}}, {{0, 0, 0}, {0, 0, 1}}});
        const auto [t, s] = rsk(to_biword(d, 6));
        const IntegerPartition shape({3, 2, 1});
        const auto M = [](std::vector<int> v) { return Multiset(std::move(v)); };
        c.check(t == MultisetTableau(shape, {{M({}), M({}), M({1})}, {M({2}), M({1, 2})}, {M({3})}}), [&] { return "T = " + t.to_string(); });
        c.check(s == MultisetTableau(shape, {{M({}), M({}), M({})}, {M({2}), M({1, 3})}, {M({1, 2})}}), [&] { return "S = " + s.to_string(); });
        c.check(inverse_rsk(t, s, {2, 2, 1}) == d, [] { return "inverse of the worked pair"; });
    });
}

// 2. Structure polynomials against brute-force counts.
void structure_oracle(Checker& c, const VerifyOptions& o) {
    const Lambdas lambdas = desk(o) ? Lambdas{{1}, {2}, {3}, {1, 1}, {2, 1}} : Lambdas{{1}, {2}, {1, 1}};
    for (const auto& lam : lambdas) {
        c.guarded("lambda size " + std::to_string(total(lam)), [&] {
            const auto basis = enumerate_basis(lam);
            const std::size_t nb = basis.size();
            std::map<MultisetDiagram, std::size_t> index;
            for (std::size_t i = 0; i < nb; ++i) index.emplace(basis[i], i);
            std::vector<std::map<std::size_t, Poly>> products(nb * nb);
            parallel_for(nb * nb, [&](std::size_t p) {
                const auto prod = multiply_basis(basis[p / nb], basis[p % nb]);
                for (const auto& [g, poly] : prod.terms()) products[p].emplace(index.at(g), poly);
            });
            const int top_n = 2 * total(lam) + 4;
            parallel_for(nb, [&](std::size_t gi) {
                const auto& g = basis[gi];
                const int rg = static_cast<int>(g.rank());
                std::vector<std::vector<std::int64_t>> counts(static_cast<std::size_t>(top_n + 1));
                for (int n = std::max(rg, 1); n <= top_n; ++n) {
                    auto& dense = counts[static_cast<std::size_t>(n)];
                    dense.assign(nb * nb, 0);
                    for (const auto& [key, cnt] : structure_counts(g, n)) dense[index.at(key.first) * nb + index.at(key.second)] = cnt;
                }
                for (std::size_t p = 0; p < nb * nb; ++p) {
                    const int lo = std::max({rg, static_cast<int>(basis[p / nb].rank()), static_cast<int>(basis[p % nb].rank()), 1});
                    auto it = products[p].find(gi);
                    const Poly phi = it == products[p].end() ? Poly() : it->second;
                    std::vector<std::pair<long, Rational>> samples;
                    bool any = !phi.is_zero();
                    for (int n = lo; n <= lo + 4; ++n) {
                        const std::int64_t cnt = counts[static_cast<std::size_t>(n)][p];
                        any = any || cnt != 0;
                        samples.emplace_back(n, Rational(static_cast<long>(cnt)));
                        c.check(eval_poly(phi, n) == Rational(static_cast<long>(cnt)), [&] {
                            return "Phi(" + std::to_string(n) + ") != count " + std::to_string(cnt) + " for " + basis[p / nb].to_string() + " * " +
                                   basis[p % nb].to_string() + " -> " + g.to_string();
                        });
                    }
                    if (any) {
                        c.check(interpolate(samples) == phi, [&] { return "interpolation differs from Phi for target " + g.to_string(); });
                    }
                }
            });
        });
    }
    c.guarded("representative independence", [&] {
        std::mt19937_64 rng(o.seed);
        const int n = 4;
        for (const auto& g : enumerate_basis({2})) {
            const auto [a, cc] = representative_pair(g, n);
            const auto counts = structure_counts(g, n);
            for (int t = 0; t < 3; ++t) {
                std::vector<int> perm(n);
                std::iota(perm.begin(), perm.end(), 0);
                std::shuffle(perm.begin(), perm.end(), rng);
                std::vector<int> pa(n), pc(n);
                for (int j = 0; j < n; ++j) {
                    pa[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])] = a.at(0, static_cast<std::size_t>(j));
                    pc[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])] = cc.at(0, static_cast<std::size_t>(j));
                }
                const WeakCompositionMatrix ra({2}, n, pa), rc({2}, n, pc);
                for (const auto& [key, cnt] : counts) {
                    c.check(count_intermediates(key.first, key.second, ra, rc) == cnt, [&] { return "count depends on the representative of " + g.to_string(); });
                }
            }
        }
    });
}

// 3. phi homomorphism, kernel, span and commutant.
void schur_weyl(Checker& c, const VerifyOptions& o) {
    const std::vector<int> lam{2};
    const auto basis = enumerate_basis(lam);
    const int max_n = desk(o) ? 5 : 3;
    for (int n = 2; n <= max_n; ++n) {
        c.guarded("n=" + std::to_string(n), [&] {
            std::vector<Matrix> images;
            for (const auto& g : basis) images.push_back(phi(MPElement::basis_element(g), n).entries);
            for (std::size_t i = 0; i < basis.size(); ++i) {
                for (std::size_t j = 0; j < basis.size(); ++j) {
                    const auto lhs = phi(multiply_basis(basis[i], basis[j]), n).entries;
                    c.check(lhs == images[i] * images[j], [&] { return "phi not multiplicative at n=" + std::to_string(n) + " on " + basis[i].to_string() + " * " + basis[j].to_string(); });
                }
            }
            std::vector<std::vector<Rational>> flat;
            for (const auto& m : images) flat.push_back(m.flat());
            const auto high = static_cast<std::size_t>(std::count_if(basis.begin(), basis.end(), [&](const auto& g) { return static_cast<int>(g.rank()) > n; }));
            const std::size_t r = span_rank(flat);
            c.check(basis.size() - r == high, [&] { return "kernel dimension " + std::to_string(basis.size() - r) + " at n=" + std::to_string(n); });
            const std::size_t cd = centralizer_dimension(n, lam);
            c.check(cd == basis.size() - high, [&] { return "centralizer dimension " + std::to_string(cd); });
            if (n >= 2 * total(lam)) {
                c.check(r == basis.size() && cd == basis.size(), [&] { return "span dimension " + std::to_string(r) + " in the isomorphism range"; });
            }
            c.check(phi(identity(lam), n).entries == Matrix::identity(images.front().rows()), [] { return "phi(id) is not the identity"; });
            for (const auto& g : basis) {
                if (static_cast<int>(g.rank()) <= n && n <= 4) {
                    c.check(commutant_check(integral_operator(g, n), GeneratorSet::SymmetricGroup), [&] { return "T not S_n-equivariant: " + g.to_string(); });
                }
            }
        });
    }
    c.guarded("commutant", [&] {
        const std::size_t full = commutant_dimension(3, lam);
        c.check(full == centralizer_dimension(3, lam) && full == integral_operator_span_rank(3, lam), [&] { return "commutant dimension " + std::to_string(full); });
        if (desk(o)) {
            const std::size_t f2 = commutant_dimension(4, {1, 1});
            c.check(f2 == enumerate_basis({1, 1}).size(), [&] { return "commutant dimension (1,1), n=4: " + std::to_string(f2); });
        }
    });
}

// 4. Embedding and idempotent.
void embedding(Checker& c, const VerifyOptions& o) {
    const Lambdas hom = desk(o) ? Lambdas{{2}, {3}, {1, 1}, {2, 1}} : Lambdas{{2}};
    for (const auto& lam : hom) {
        c.guarded("homomorphism", [&] {
            const auto basis = enumerate_basis(lam);
            std::vector<PAElement> images;
            for (const auto& g : basis) images.push_back(embed(MPElement::basis_element(g)));
            for (std::size_t i = 0; i < basis.size(); ++i) {
                for (std::size_t j = 0; j < basis.size(); ++j) {
                    c.check(embed(multiply_basis(basis[i], basis[j])) == multiply_orbit_basis(images[i], images[j]),
                            [&] { return "embedding not multiplicative on " + basis[i].to_string() + " * " + basis[j].to_string(); });
                }
            }
            std::set<SetPartitionDiagram> seen;
            std::size_t support = 0;
            for (const auto& im : images) {
                for (const auto& [d, p] : im.terms()) seen.insert(d), ++support;
            }
            c.check(seen.size() == support && seen.size() == enumerate_diagrams(total(lam)).size(), [] { return "orbit supports overlap or miss diagrams"; });
        });
    }
    const Lambdas ids{{1}, {2}, {3}, {1, 1}, {2, 1}, {1, 1, 1}};
    for (const auto& lam : ids) {
        c.guarded("identity", [&] { c.check(embed(identity(lam)) == idempotent_e(lam), [] { return "embed(id) != e"; }); });
    }
    for (int k = 1; k <= 3; ++k) {
        c.guarded("idempotent", [&] {
            const auto e = idempotent_e({k});
            c.check(multiply_orbit_basis(e, e) == e, [&] { return "e^2 != e at k=" + std::to_string(k); });
            c.check(involution_i(e) == e, [&] { return "i(e) != e at k=" + std::to_string(k); });
            const std::vector<int> ones(static_cast<std::size_t>(k), 1);
            const auto basis = enumerate_basis(ones);
            c.check(BigInt(static_cast<unsigned long>(basis.size())) == bell_number(2 * k) && basis.size() == std::vector<std::size_t>{2, 15, 203}[static_cast<std::size_t>(k - 1)],
                    [&] { return "|B(1^k)| = " + std::to_string(basis.size()); });
            std::set<SetPartitionDiagram> hit;
            for (const auto& g : basis) {
                const auto im = embed(MPElement::basis_element(g));
                const bool single = im.terms().size() == 1 && im.terms().begin()->second == Poly(1);
                c.check(single, [&] { return "embed of " + g.to_string() + " is not a single orbit basis element"; });
                if (single) hit.insert(im.terms().begin()->first);
            }
            c.check(hit.size() == enumerate_diagrams(k).size(), [] { return "(1^k) embedding is not onto the orbit basis"; });
        });
    }
    for (int k = 2; k <= (desk(o) ? 3 : 2); ++k) {
        c.guarded("e x e", [&] {
            const auto e = idempotent_e({k});
            for (const auto& d0 : enumerate_diagrams(k)) {
                const auto exe = multiply_orbit_basis(multiply_orbit_basis(e, PAElement::basis_element(d0, PABasis::Orbit)), e);
                std::map<std::pair<int, int>, unsigned> types;
                BigInt top = 1;
                for (const auto& b : d0.vertex_blocks()) {
                    const auto u = static_cast<unsigned>(std::count_if(b.begin(), b.end(), [&](int v) { return v < k; }));
                    ++types[{static_cast<int>(u), static_cast<int>(b.size() - u)}];
                    top *= factorial(u);
                }
                BigInt theta = 1;
                for (const auto& [t, m] : types) theta *= factorial(m);
                const Rational scale(theta * top, factorial(static_cast<unsigned>(k)));  // theta / beta
                const auto expect = embed(MPElement::basis_element(class_of_partition_diagram(d0, {k}))) * Poly(scale);
                c.check(exe == expect, [&] { return "e x e != (theta/beta) embed for d0 = " + d0.to_string(); });
            }
        });
    }
}

// 5. Orbit and diagram multiplication agree through the basis change.
void orbit_basis(Checker& c, const VerifyOptions& o) {
    for (int k = 1; k <= (desk(o) ? 3 : 2); ++k) {
        c.guarded("k=" + std::to_string(k), [&] {
            const auto all = enumerate_diagrams(k);
            const std::size_t nd = all.size();
            std::map<SetPartitionDiagram, std::size_t> index;
            for (std::size_t i = 0; i < nd; ++i) index.emplace(all[i], i);
            std::vector<std::vector<std::size_t>> coarser(nd);
            for (std::size_t i = 0; i < nd; ++i) {
                for (const auto& d : coarsenings(all[i])) coarser[i].push_back(index.at(d));
            }
            using Sparse = std::vector<std::pair<std::size_t, Poly>>;
            std::vector<Sparse> table(nd * nd);
            parallel_for(nd * nd, [&](std::size_t p) {
                const auto prod = orbit_product(all[p / nd], all[p % nd]);
                for (const auto& [d, poly] : prod.terms()) table[p].emplace_back(index.at(d), poly);
            });
            parallel_for(nd, [&](std::size_t j) {
                // column[a] = x_a * (sum of x_b over b coarser than all[j]), dense in the orbit basis.
                std::vector<std::vector<Poly>> column(nd, std::vector<Poly>(nd));
                for (std::size_t a = 0; a < nd; ++a) {
                    for (std::size_t b : coarser[j]) {
                        for (const auto& [t, poly] : table[a * nd + b]) column[a][t] += poly;
                    }
                }
                const auto dj = PAElement::basis_element(all[j], PABasis::Diagram);
                for (std::size_t i = 0; i < nd; ++i) {
                    std::vector<Poly> lhs(nd);
                    for (std::size_t a : coarser[i]) {
                        for (std::size_t t = 0; t < nd; ++t) {
                            if (!column[a][t].is_zero()) lhs[t] += column[a][t];
                        }
                    }
                    const auto rhs = orbit_from_diagram(multiply_diagram_basis(PAElement::basis_element(all[i], PABasis::Diagram), dj));
                    std::vector<Poly> dense(nd);
                    for (const auto& [d, poly] : rhs.terms()) dense[index.at(d)] = poly;
                    c.check(lhs == dense, [&] { return "orbit and diagram products differ on " + all[i].to_string() + " * " + all[j].to_string(); });
                }
            });
        });
    }
}

// 6. Multiplicities.
void multiplicities(Checker& c, const VerifyOptions& o) {
    const int max_n = desk(o) ? 6 : 4;
    const int max_size = desk(o) ? 4 : 2;
    Lambdas lambdas;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int left) -> void {
        if (!cur.empty()) lambdas.push_back(cur);
        if (cur.size() == 3) return;
        for (int v = 0; v <= left; ++v) {
            cur.push_back(v);
            self(self, left - v);
            cur.pop_back();
        }
    };
    rec(rec, max_size);
    for (int n = 1; n <= max_n; ++n) {
        c.guarded("n=" + std::to_string(n), [&] {
            const auto parts = enumerate_partitions(n);
            for (const auto& lam : lambdas) {
                BigInt dim = 0;
                for (const auto& nu : parts) {
                    const auto a = a_coeff_ssmt(nu, lam);
                    const auto b = a_coeff_plethysm(nu, lam);
                    c.check(a == b, [&] { return "a_ssmt != a_plethysm at nu=" + nu.to_string(); });
                    dim += count_syt(nu) * a;
                }
                c.check(dim == count_weak_compositions(n, lam), [&] { return "dimension identity fails at n=" + std::to_string(n); });
            }
            for (int k = 0; k <= 3; ++k) {
                std::vector<IntegerPartition> nonzero;
                for (const auto& nu : parts) {
                    if (a_coeff_ssmt(nu, {k}) > 0) nonzero.push_back(nu);
                }
                c.check(nonzero == lambda_set(k, n), [&] { return "nonzero set differs from Lambda_{k,n} at k=" + std::to_string(k); });
            }
        });
    }
    c.guarded("n=5, k=2 instance", [&] {
        const std::vector<std::pair<IntegerPartition, std::int64_t>> expect{{IntegerPartition({5}), 2}, {IntegerPartition({4, 1}), 2}, {IntegerPartition({3, 2}), 1}};
        BigInt sum = 0;
        for (const auto& [nu, a] : expect) {
            c.check(a_coeff_ssmt(nu, {2}) == a, [&] { return "a at " + nu.to_string(); });
            sum += count_syt(nu) * a;
        }
        c.check(sum == 15 && count_syt(IntegerPartition({4, 1})) == 4 && count_syt(IntegerPartition({3, 2})) == 5, [] { return "1*2 + 4*2 + 5*1 != 15"; });
    });
    c.guarded("principal specialization", [&] {
        for (int n = 1; n <= 5; ++n) {
            for (const auto& nu : enumerate_partitions(n)) {
                const auto p = principal_specialization(nu, 8);
                c.check(p.tableaux == p.product, [&] { return "principal specialization differs at " + nu.to_string(); });
            }
        }
    });
}

// 7. Restriction coefficients.
void restriction(Checker& c, const VerifyOptions& o) {
    const int max_n = desk(o) ? 5 : 4;
    for (int n = 1; n <= max_n; ++n) {
        c.guarded("n=" + std::to_string(n), [&] {
            for (int m = 0; m <= 4; ++m) {
                for (const auto& lam : enumerate_partitions(m)) {
                    if (static_cast<int>(lam.length()) > n) continue;
                    for (const auto& nu : enumerate_partitions(n)) {
                        const auto r = r_coeff(lam, nu);
                        const auto oracle = r_coeff_character_oracle(lam, nu);
                        c.check(r == oracle && r >= 0, [&] {
                            return "r(" + lam.to_string() + "," + nu.to_string() + ") = " + std::to_string(r) + ", oracle " + std::to_string(oracle);
                        });
                    }
                }
            }
        });
    }
    c.guarded("spot values", [&] {
        c.check(r_coeff(IntegerPartition({1, 1}), IntegerPartition({5})) == 0, [] { return "r^{(1,1)}_{(5)} != 0"; });
        c.check(r_coeff(IntegerPartition({1, 1}), IntegerPartition({4, 1})) == 1, [] { return "r^{(1,1)}_{(4,1)} != 1"; });
    });
}

// 8. RSK bijection and symmetry.
void rsk_battery(Checker& c, const VerifyOptions& o) {
    const Lambdas lambdas = desk(o) ? Lambdas{{2}, {3}, {1, 1}} : Lambdas{{2}};
    for (const auto& lam : lambdas) {
        const int size = total(lam);
        for (int n = size; n <= 2 * size; ++n) {
            c.guarded("n=" + std::to_string(n), [&] {
                const Multiset content = Multiset::from_multiplicities(lam);
                std::set<std::pair<std::string, std::string>> images;
                std::size_t diagrams = 0;
                for (const auto& d : enumerate_basis(lam)) {
                    if (static_cast<int>(d.rank()) > n) continue;
                    ++diagrams;
                    const auto [t, s] = rsk(to_biword(d, n));
                    const bool valid = t.is_semistandard() && s.is_semistandard() && t.shape() == s.shape() && t.shape().size() == n &&
                                       t.content() == content && s.content() == content;
                    c.check(valid, [&] { return "invalid tableau pair for " + d.to_string(); });
                    c.check(inverse_rsk(t, s, lam) == d, [&] { return "inverse fails on " + d.to_string(); });
                    images.insert({t.to_string(), s.to_string()});
                    const auto rep = symmetry_check(d, n);
                    c.check(rep.transpose_swaps, [&] { return "rsk(d^t) != (S,T) for " + d.to_string(); });
                    if (rep.symmetric) {
                        c.check(rep.fixed_blocks == rep.odd_columns, [&] { return "odd columns != fixed blocks for " + d.to_string(); });
                    }
                }
                std::size_t pairs = 0;
                for (const auto& nu : enumerate_partitions(n)) {
                    const auto k = static_cast<std::size_t>(count_ssmt(nu, lam));
                    pairs += k * k;
                }
                c.check(images.size() == diagrams && pairs == diagrams, [&] {
                    return std::to_string(diagrams) + " diagrams, " + std::to_string(images.size()) + " images, " + std::to_string(pairs) + " tableau pairs";
                });
            });
        }
    }
}

// 9. Balanced subalgebra.
void balanced(Checker& c, const VerifyOptions&) {
    for (const auto& lam : Lambdas{{2}, {1, 1}}) {
        c.guarded("closure", [&] {
            const auto bal = balanced_basis(lam);
            for (const auto& a : bal) {
                for (const auto& b : bal) {
                    const auto prod = multiply_basis(a, b);
                    for (const auto& [g, p] : prod.terms()) {
                        c.check(is_balanced(g) && p.is_constant(), [&] { return "balanced product leaves the subalgebra: " + a.to_string() + " * " + b.to_string(); });
                    }
                }
            }
        });
        c.guarded("monomial commutant", [&] {
            for (const auto& g : enumerate_basis(lam)) {
                if (g.rank() > 3) continue;
                const bool monomial = commutant_check(integral_operator(g, 3), GeneratorSet::Monomial);
                c.check(monomial == is_balanced(g), [&] { return "monomial commutant membership differs from balance for " + g.to_string(); });
            }
        });
    }
}

}  // namespace

CriterionResult run_criterion(int id, const VerifyOptions& options) {
    using Battery = void (*)(Checker&, const VerifyOptions&);
    static const Battery batteries[] = {worked_examples, structure_oracle, schur_weyl, embedding, orbit_basis,
                                        multiplicities, restriction, rsk_battery, balanced};
    if (id < 1 || id > 9) throw InvalidArgument("criterion ids are 1..9");
    CriterionResult r;
    r.id = id;
    r.name = criterion_names()[static_cast<std::size_t>(id - 1)];
    const auto start = std::chrono::steady_clock::now();
    Checker c(r);
    batteries[id - 1](c, options);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::vector<CriterionResult> run_acceptance(const VerifyOptions& options) {
    std::vector<int> ids = options.criteria;
    if (ids.empty()) {
        ids.resize(9);
        std::iota(ids.begin(), ids.end(), 1);
    }
    std::vector<CriterionResult> out;
    for (int id : ids) out.push_back(run_criterion(id, options));
    return out;
}

}  // namespace mpa
