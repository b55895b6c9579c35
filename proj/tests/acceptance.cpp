// Acceptance harness: eleven numbered end-to-end checks over the whole
// library, each with a wall-clock budget. Prints one PASS/FAIL line per
// criterion and exits nonzero if any fail.

#include <chrono>
#include <iomanip>
#include <iostream>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "coxpoly/coxpoly.hpp"

namespace {

using namespace coxpoly;

// Every polynomial produced by any criterion lands here; criterion 11 checks
// the global invariants (monic, constant term 1, palindromic) on all of them.
std::vector<Poly> g_polys;

void keep(const Poly& p) { g_polys.push_back(p); }

bool suite_ok(const SuiteResult& r, std::string& detail) {
    for (const Poly& p : r.produced) g_polys.push_back(p);
    if (r.passed()) return true;
    detail = "suite " + r.name + ": " + std::to_string(r.failures) + " of " +
             std::to_string(r.checks) + " checks failed";
    if (!r.counterexamples.empty()) detail += "; first: " + r.counterexamples.front();
    return false;
}

struct Harness {
    int failed = 0;

    template <typename Fn>
    void criterion(int number, double budget_seconds, Fn&& body) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = body(detail);
        } catch (const std::exception& e) {
            ok = false;
            detail = std::string("unexpected exception: ") + e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok && elapsed >= budget_seconds) {
            ok = false;
            detail = "over the " + std::to_string(budget_seconds) + "s budget";
        }
        std::cout << "criterion " << number << ": " << (ok ? "PASS" : "FAIL") << " ("
                  << std::fixed << std::setprecision(2) << elapsed << "s)";
        if (!ok && !detail.empty()) std::cout << "  " << detail;
        std::cout << "\n" << std::flush;
        if (!ok) ++failed;
    }
};

std::string triple_str(int a, int b, int c) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

}  // namespace

int main() {
    Harness h;

    // 1. Linear quivers: chi of the path algebra on n vertices is 1 + x + ... + x^n.
    h.criterion(1, 1.0, [](std::string& detail) {
        for (int n = 1; n <= 30; ++n) {
            const Poly chi = coxeter_polynomial(cartan_matrix(linear_quiver(n)));
            keep(chi);
            if (chi != Poly::ones(static_cast<std::size_t>(n))) {
                detail = "linear quiver on " + std::to_string(n) + " vertices";
                return false;
            }
        }
        return true;
    });

    // 2. D-type stars: chi of the star (1, 1, n-3) is x^n + x^{n-1} + x + 1.
    h.criterion(2, 1.0, [](std::string& detail) {
        for (int n = 4; n <= 30; ++n) {
            const Poly chi = coxeter_polynomial(cartan_matrix(build_star({1, 1, n - 3})));
            keep(chi);
            const Poly expected = Poly::monomial(1, static_cast<std::size_t>(n)) +
                                  Poly::monomial(1, static_cast<std::size_t>(n - 1)) +
                                  Poly::monomial(1, 1) + Poly::constant(1);
            if (chi != expected) {
                detail = "D-type star on " + std::to_string(n) + " vertices";
                return false;
            }
        }
        return true;
    });

    // 3. Star product formula, coefficient window and the (1, b, c) explicit
    // polynomial against the direct matrix computation, all triples a+b+c <= 14.
    h.criterion(3, 10.0, [](std::string& detail) { return suite_ok(suite_closed_forms(14), detail); });

    // 4. One-point extension coefficient recursion vs block Coxeter matrix vs
    // block Cartan matrix on 200 random extensions.
    h.criterion(4, 30.0, [](std::string& detail) { return suite_ok(suite_ope(8, 200), detail); });

    // 5. Every tree on <= 11 vertices that is neither a path nor a three-branch
    // star has coefficient of x^{N-2} at most -1. Exhaustive.
    h.criterion(5, 30.0, [](std::string& detail) {
        for (int n = 1; n <= 11; ++n)
            for (const Quiver& q : enumerate_trees(n)) {
                if (!std::holds_alternative<OtherTree>(tree_shape(q))) continue;
                const Poly chi = coxeter_polynomial(cartan_matrix(q));
                keep(chi);
                if (chi.coeff(n - 2) > -1) {
                    detail = "tree on " + std::to_string(n) +
                             " vertices with coefficient " + chi.coeff(n - 2).str();
                    return false;
                }
            }
        return true;
    });

    // 6. Predicted canonical coefficients vs the extension recursion for every
    // in-hypothesis branch triple with a+b+c <= 14; the five corner triples
    // where two branch lengths tie must be in hypothesis.
    h.criterion(6, 10.0, [](std::string& detail) {
        const std::set<std::vector<int>> corners{
            {1, 3, 3}, {1, 3, 4}, {2, 2, 2}, {2, 2, 3}, {2, 3, 3}};
        std::set<std::vector<int>> checked;
        for (int a = 1; a <= 4; ++a)
            for (int b = a; a + 2 * b <= 14; ++b)
                for (int c = b; a + b + c <= 14; ++c) {
                    std::map<int, Int> predicted;
                    try {
                        predicted = predicted_canonical_coeffs(a, b, c);
                    } catch (const OutsideLemmaHypothesesError&) {
                        continue;
                    }
                    checked.insert({a, b, c});
                    const int n = a + b + c + 1;
                    const IntMatrix star = cartan_matrix(build_star({a, b, c}));
                    const Poly chi =
                        ope_coefficients(star, canonical_ext_vector(static_cast<std::size_t>(n)));
                    keep(chi);
                    for (const auto& [offset, value] : predicted)
                        if (chi.coeff(n - offset) != value) {
                            detail = "triple " + triple_str(a, b, c) + ", offset " +
                                     std::to_string(offset);
                            return false;
                        }
                }
        for (const auto& t : corners)
            if (!checked.count(t)) {
                detail = "corner triple " + triple_str(t[0], t[1], t[2]) + " was not covered";
                return false;
            }
        return true;
    });

    // 7. Separation, exhaustive to 14 vertices: tree polynomials and canonical
    // (t = 3, delta >= 0) polynomials are disjoint sets, the trace -1
    // conditions label both sides correctly, and the three coefficient
    // confrontations behind the separation argument are replayed.
    h.criterion(7, 60.0, [](std::string& detail) { return suite_ok(suite_separation(14), detail); });

    // 8. Trace trichotomy spot checks.
    h.criterion(8, 5.0, [](std::string& detail) {
        const Quiver kronecker{2, {{1, 2}, {1, 2}}};
        const CoxeterData kd = CoxeterData::from_cartan(cartan_matrix(kronecker));
        keep(kd.chi);
        if (kd.trace() != 2) {
            detail = "Kronecker trace " + kd.trace().str();
            return false;
        }
        for (const std::vector<int>& w :
             {std::vector<int>{2, 2, 2, 2}, std::vector<int>{2, 2, 2, 2, 2}}) {
            const CoxeterData d = CoxeterData::from_cartan(canonical_cartan(w));
            keep(d.chi);
            if (d.trace() >= -1) {
                detail = "canonical t=" + std::to_string(w.size()) + " trace " + d.trace().str();
                return false;
            }
        }
        for (int n = 1; n <= 8; ++n)
            for (const Quiver& q : enumerate_trees(n)) {
                const CoxeterData d = CoxeterData::from_cartan(cartan_matrix(q));
                keep(d.chi);
                if (d.trace() != -1) {
                    detail = "tree on " + std::to_string(n) + " vertices, trace " +
                             d.trace().str();
                    return false;
                }
            }
        for (int p1 = 2; 3 * p1 <= 11; ++p1)
            for (int p2 = p1; p1 + 2 * p2 <= 11; ++p2)
                for (int p3 = p2; p1 + p2 + p3 <= 11; ++p3) {
                    const CoxeterData d = CoxeterData::from_cartan(canonical_cartan({p1, p2, p3}));
                    keep(d.chi);
                    if (d.trace() != -1) {
                        detail = "canonical " + triple_str(p1, p2, p3) + " trace " +
                                 d.trace().str();
                        return false;
                    }
                }
        return true;
    });

    // 9. Homological trace identities: k = 1..4 on all trees <= 8 vertices and
    // canonical algebras <= 10 vertices, 50 random acyclic quivers with
    // <= 5 vertices, and the worked two-vertex values.
    h.criterion(9, 60.0, [](std::string& detail) {
        return suite_ok(suite_traces(8, 10, 5, 50), detail);
    });

    // 10. Waring reconstruction of the characteristic polynomial from power
    // traces on 100 random matrices <= 7x7, plus the sign-convention regression.
    h.criterion(10, 10.0, [](std::string& detail) { return suite_ok(suite_waring(7, 100), detail); });

    // 11. Global invariants on every polynomial produced above: monic,
    // constant term 1, palindromic.
    h.criterion(11, 5.0, [](std::string& detail) {
        std::size_t idx = 0;
        for (const Poly& p : g_polys) {
            if (!p.is_monic() || p.coeff(0) != 1 || !p.is_palindromic()) {
                detail = "polynomial #" + std::to_string(idx) + " = " + p.to_string();
                return false;
            }
            ++idx;
        }
        detail = "no polynomials collected";
        return !g_polys.empty();
    });

    if (h.failed == 0) {
        std::cout << "acceptance: all 11 criteria passed (" << g_polys.size()
                  << " polynomials checked)\n";
        return 0;
    }
    std::cout << "acceptance: " << h.failed << " criteria failed\n";
    return 1;
}
