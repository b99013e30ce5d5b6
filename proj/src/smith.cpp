#include "penlab/smith.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace penlab {

std::string multiplicityListStr(const MultiplicityList& list) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < list.size(); ++i) {
        if (i) out << ',';
        out << list[i];
    }
    out << ')';
    return out.str();
}

Poly detPoly(const Pencil& p) {
    if (p.rows() != p.cols()) throw std::invalid_argument("detPoly: pencil must be square");
    const std::size_t n = p.rows();
    if (n == 0) return Poly::one();
    std::vector<std::pair<GaussianRational, GaussianRational>> points;
    points.reserve(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        GaussianRational x{Rational(static_cast<long>(k)), Rational(0)};
        points.emplace_back(x, det(evaluate(p, x)));
    }
    return interpolate(points);
}

bool isRegular(const Pencil& p) {
    return p.rows() == p.cols() && !detPoly(p).isZero();
}

namespace {

// Local Smith form over the valuation ring at lambda = 0: repeatedly move a
// minimal-valuation entry to the pivot, clear its column with unit row
// operations, and record the valuation. All arithmetic is truncated mod
// lambda^cap; a regular pencil keeps every valuation strictly below cap.
std::vector<std::size_t> localValuationsAtZero(PolyMatrix m, std::size_t cap) {
    const std::size_t n = m.rows();
    std::vector<std::size_t> vals;
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t bestVal = cap;
        std::size_t bestRow = step, bestCol = step;
        for (std::size_t j = step; j < n; ++j) {
            for (std::size_t i = step; i < n; ++i) {
                std::size_t v = m(i, j).valuationAtZero(cap);
                if (v < bestVal) {
                    bestVal = v;
                    bestRow = i;
                    bestCol = j;
                }
            }
        }
        if (bestVal >= cap)
            throw std::domain_error("partialMultiplicities: pencil is singular");
        if (bestRow != step)
            for (std::size_t j = step; j < n; ++j) std::swap(m(step, j), m(bestRow, j));
        if (bestCol != step)
            for (std::size_t i = step; i < n; ++i) std::swap(m(i, step), m(i, bestCol));
        vals.push_back(bestVal);
        // Pivot = lambda^bestVal * unit. Row i <- unit*row i - f_i*row step kills
        // column step below the pivot; the trailing block then carries the
        // remaining invariant factors up to unit column operations.
        Poly unit = m(step, step).shiftedDown(bestVal);
        for (std::size_t i = step + 1; i < n; ++i) {
            if (m(i, step).isZero()) continue;
            Poly f = m(i, step).shiftedDown(bestVal);
            for (std::size_t j = step; j < n; ++j)
                m(i, j) = (unit * m(i, j) - f * m(step, j)).truncated(cap);
        }
    }
    return vals;
}

}  // namespace

MultiplicityList partialMultiplicities(const Pencil& p, const EigenvalueRef& eig) {
    if (p.rows() != p.cols())
        throw std::invalid_argument("partialMultiplicities: pencil must be square");
    const std::size_t n = p.rows();
    if (n == 0) return {};
    Pencil local = eig.infinite ? reversal(p) : p;
    // Shift so the eigenvalue of interest sits at lambda = 0:
    // A + (lambda + mu) B = (A + mu B) + lambda B.
    PolyMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            GaussianRational a = local.A(i, j);
            if (!eig.infinite) a += eig.value * local.B(i, j);
            m(i, j) = Poly::linear(a, local.B(i, j));
        }
    std::vector<std::size_t> vals = localValuationsAtZero(std::move(m), n + 2);
    MultiplicityList out;
    for (std::size_t v : vals)
        if (v > 0) out.push_back(v);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

AlgGeo algGeoMultiplicity(const Pencil& p, const EigenvalueRef& eig) {
    MultiplicityList list = partialMultiplicities(p, eig);
    AlgGeo r;
    r.geometric = list.size();
    for (std::size_t v : list) r.algebraic += v;
    return r;
}

Matrix sylvesterMatrix(const Poly& f, const Poly& g) {
    if (f.isZero() || g.isZero())
        throw std::invalid_argument("sylvesterMatrix: zero polynomial");
    const std::size_t df = static_cast<std::size_t>(f.degree());
    const std::size_t dg = static_cast<std::size_t>(g.degree());
    const std::size_t n = df + dg;
    Matrix s(n, n);
    // dg rows of f's coefficients (descending), then df rows of g's.
    for (std::size_t r = 0; r < dg; ++r)
        for (std::size_t k = 0; k <= df; ++k) s(r, r + k) = f[df - k];
    for (std::size_t r = 0; r < df; ++r)
        for (std::size_t k = 0; k <= dg; ++k) s(dg + r, r + k) = g[dg - k];
    return s;
}

std::size_t distinctRootCount(const Poly& p) {
    if (p.isZero()) throw std::invalid_argument("distinctRootCount: zero polynomial");
    if (p.degree() == 0) return 0;
    const std::size_t d = static_cast<std::size_t>(p.degree());
    if (d == 1) return 1;
    Poly dp = p.derivative();
    // deg gcd(p, p') = (2d - 1) - rank S(p, p'); distinct roots = d - deg gcd.
    std::size_t rk = rank(sylvesterMatrix(p, dp));
    std::size_t degGcd = (2 * d - 1) - rk;
    return d - degGcd;
}

bool dominates(const MultiplicityList& m, const MultiplicityList& n) {
    if (m.size() < n.size()) return false;
    for (std::size_t j = 0; j < n.size(); ++j)
        if (m[j] < n[j]) return false;
    return true;
}

NewEigenvalueReport newEigenvalueProfile(const Pencil& base, const Pencil& perturbed, int mu) {
    if (mu != 1 && mu != 2)
        throw std::invalid_argument("newEigenvalueProfile: mu must be 1 or 2");
    NewEigenvalueReport rep;
    Poly chiBase = detPoly(base);
    Poly chiPert = detPoly(perturbed);
    if (chiBase.isZero() || chiPert.isZero()) {
        rep.pass = false;
        rep.note = "a pencil is singular";
        return rep;
    }
    // Divide out every root shared with the base spectrum, at full multiplicity.
    Poly q = chiPert;
    for (;;) {
        Poly g = Poly::gcd(q, chiBase);
        if (g.degree() <= 0) break;
        q = q.exactDiv(g);
    }
    rep.residual = q;

    const std::size_t n = base.rows();
    const std::size_t defBase = n - static_cast<std::size_t>(chiBase.degree());
    const std::size_t defPert = n - static_cast<std::size_t>(chiPert.degree());
    // A fresh infinite eigenvalue exists only when the base pencil has none.
    rep.newInfiniteMult = (defBase == 0) ? defPert : 0;

    bool finiteOk = true;
    std::string note;
    if (q.degree() <= 0) {
        rep.newDistinctFinite = 0;
    } else if (mu == 1) {
        rep.newDistinctFinite = distinctRootCount(q);
        finiteOk = rep.newDistinctFinite == static_cast<std::size_t>(q.degree());
        if (!finiteOk) note = "residual has a repeated root";
    } else {
        // Demand residual = c * g^2 with g squarefree.
        if (q.degree() % 2 != 0) {
            finiteOk = false;
            note = "residual degree is odd";
        } else {
            Poly g = Poly::gcd(q, q.derivative());
            if (2 * g.degree() != q.degree()) {
                finiteOk = false;
                note = "residual is not a perfect square";
            } else {
                Poly rem = q;
                bool divides = true;
                for (int t = 0; t < 2 && divides; ++t) {
                    try {
                        rem = rem.exactDiv(g);
                    } catch (const std::exception&) {
                        divides = false;
                    }
                }
                if (!divides || rem.degree() != 0) {
                    finiteOk = false;
                    note = "residual is not a perfect square";
                } else if (distinctRootCount(g) != static_cast<std::size_t>(g.degree())) {
                    finiteOk = false;
                    note = "square root of residual has a repeated root";
                } else {
                    rep.newDistinctFinite = static_cast<std::size_t>(g.degree());
                }
            }
        }
    }
    bool infOk = rep.newInfiniteMult == 0 || rep.newInfiniteMult == static_cast<std::size_t>(mu);
    if (!infOk && note.empty()) note = "new infinite eigenvalue has wrong multiplicity";
    rep.pass = finiteOk && infOk;
    rep.note = note;
    return rep;
}

}  // namespace penlab
