#include "qfx/transfer.hpp"

namespace qfx {

QuadSystem build_system(const Poly& f, const Poly& g) {
    check(f.deg() >= 2, "DegreeTooSmall", "the construction needs deg(f) >= 2");
    check(is_squarefree(f), "NotSeparable", "the construction needs a separable polynomial");
    check(!g.is_zero() && gcd(f, g).is_constant(), "NotCoprime", "g must be coprime to f");
    const Field& field = f.field();
    int n = f.deg();
    Poly m = f.monic();
    // u_d = g * theta^d reduced mod f, for d = 0, ..., 2n-2
    std::vector<Poly> u;
    u.reserve(static_cast<size_t>(2 * n - 1));
    Poly cur = g % m;
    Poly x = Poly::X(field);
    for (int d = 0; d <= 2 * n - 2; ++d) {
        u.push_back(cur);
        cur = (cur * x) % m;
    }
    QuadSystem sys{f, g, n, {}};
    for (int k = 1; k <= n - 1; ++k) {
        GramMatrix gram(static_cast<size_t>(n) + 1,
                        std::vector<Fq>(static_cast<size_t>(n) + 1, field->zero()));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                gram[static_cast<size_t>(i)][static_cast<size_t>(j)] = u[static_cast<size_t>(i + j)].coeff(k);
        if (k == 1) gram[static_cast<size_t>(n)][static_cast<size_t>(n)] = -field->one();
        sys.grams.push_back(std::move(gram));
    }
    return sys;
}

int gram_rank(const GramMatrix& m) {
    GramMatrix a = m;
    size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t pivot = rank;
        while (pivot < rows && a[pivot][col].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[rank]);
        Fq inv = a[rank][col].inv();
        for (size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][col].is_zero()) continue;
            Fq factor = a[r][col] * inv;
            for (size_t cc = 0; cc < cols; ++cc) a[r][cc] = a[r][cc] - factor * a[rank][cc];
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

bool pencil_rank_check(const QuadSystem& sys) {
    const Field& field = sys.field();
    size_t r = sys.grams.size();
    if (r == 0) return true;
    size_t dim = sys.grams[0].size();
    // projective combinations: first nonzero coefficient normalized to 1
    for (size_t lead = 0; lead < r; ++lead) {
        uint64_t tail = 1;
        for (size_t i = lead + 1; i < r; ++i) tail *= field->q();
        for (uint64_t ord = 0; ord < tail; ++ord) {
            GramMatrix sum(dim, std::vector<Fq>(dim, field->zero()));
            uint64_t rest = ord;
            for (size_t i = 0; i < r; ++i) {
                Fq coeff = field->zero();
                if (i == lead) coeff = field->one();
                if (i > lead) {
                    coeff = field->element(rest % field->q());
                    rest /= field->q();
                }
                if (coeff.is_zero()) continue;
                for (size_t a = 0; a < dim; ++a)
                    for (size_t b = 0; b < dim; ++b)
                        sum[a][b] = sum[a][b] + coeff * sys.grams[i][a][b];
            }
            if (gram_rank(sum) < 3) return false;
        }
    }
    return true;
}

namespace {

Poly embed_poly(const Poly& a, const Field& into) {
    std::vector<Fq> c;
    c.reserve(static_cast<size_t>(a.deg()) + 1);
    for (int i = 0; i <= a.deg(); ++i) c.push_back(embed(a.coeff(i), into));
    return Poly::from_coeffs(into, std::move(c));
}

Field extension_of(const Field& base, int ext_degree) {
    check(ext_degree >= 1, "BadDegree", "extension degree must be positive");
    if (ext_degree == 1) return base;
    return make_field(base->p(), base->k() * static_cast<uint64_t>(ext_degree));
}

Fq eval_gram(const GramMatrix& g, const std::vector<Fq>& v, const Field& field) {
    Fq acc = field->zero();
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        for (size_t j = 0; j < v.size(); ++j) {
            if (v[j].is_zero()) continue;
            acc = acc + g[i][j] * v[i] * v[j];
        }
    }
    return acc;
}

}  // namespace

PointEnumResult point_enum(const QuadSystem& sys, int ext_degree, uint64_t budget) {
    Field ext = extension_of(sys.field(), ext_degree);
    uint64_t qe = ext->q();
    size_t dim = static_cast<size_t>(sys.n) + 1;
    u128 points = 0;
    u128 power = 1;
    for (size_t i = 0; i < dim; ++i) {
        points += power;
        power *= qe;
    }
    check(points <= budget, "BudgetExceeded", "projective point count exceeds the budget");

    std::vector<GramMatrix> grams;
    grams.reserve(sys.grams.size());
    for (const auto& g : sys.grams) {
        GramMatrix eg(dim, std::vector<Fq>(dim, ext->zero()));
        for (size_t a = 0; a < dim; ++a)
            for (size_t b = 0; b < dim; ++b) eg[a][b] = embed(g[a][b], ext);
        grams.push_back(std::move(eg));
    }
    Poly fext = embed_poly(sys.f.monic(), ext);

    PointEnumResult out{{}, 0};
    std::vector<Fq> v(dim, ext->zero());
    for (size_t lead = 0; lead < dim; ++lead) {
        uint64_t free = dim - lead - 1;
        u128 count = 1;
        for (uint64_t i = 0; i < free; ++i) count *= qe;
        for (u128 ord = 0; ord < count; ++ord) {
            for (size_t i = 0; i < lead; ++i) v[i] = ext->zero();
            v[lead] = ext->one();
            u128 rest = ord;
            for (size_t i = lead + 1; i < dim; ++i) {
                v[i] = ext->element(static_cast<uint64_t>(rest % qe));
                rest /= qe;
            }
            bool ok = true;
            for (const auto& g : grams)
                if (!eval_gram(g, v, ext).is_zero()) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            std::vector<Fq> xcoords(v.begin(), v.end() - 1);
            Poly xpoly = Poly::from_coeffs(ext, xcoords);
            bool norm_nonzero = !xpoly.is_zero() && gcd(xpoly, fext).is_constant();
            bool affine = !v[dim - 1].is_zero();
            if (affine && norm_nonzero) ++out.points_c;
            out.solutions.push_back(ProjPoint{v, affine, norm_nonzero});
        }
    }
    return out;
}

EquivalenceReport equivalence_check(const Poly& f, const Poly& g, int ext_degree, uint64_t budget) {
    QuadSystem sys = build_system(f, g);
    PointEnumResult pts = point_enum(sys, ext_degree, budget);
    bool lhs = pts.points_c > 0;

    Field ext = extension_of(f.field(), ext_degree);
    Poly fext = embed_poly(f, ext);
    Poly gext = embed_poly(g, ext);
    QuotAlg A(fext);
    bool rhs = false;
    std::optional<Fq> witness;
    for (uint64_t i = 0; i < ext->q() && !rhs; ++i) {
        Fq a = ext->element(i);
        if (fext.eval(a).is_zero()) continue;
        Poly lin = Poly::X(ext) - Poly::constant(a);
        std::vector<bool> cls = A.square_class(A.reduce(lin * gext));
        bool all = true;
        for (bool b : cls) all = all && b;
        if (all) {
            rhs = true;
            witness = a;
        }
    }
    internal_check(lhs == rhs, "transfer-curve equivalence failed");
    return EquivalenceReport{lhs, rhs, lhs == rhs, witness};
}

std::vector<RealisationEntry> linear_realisation_scan(const Poly& f) {
    check(f.deg() >= 1, "NotSeparable", "the scan needs a nonconstant polynomial");
    check(is_squarefree(f), "NotSeparable", "the scan needs a separable polynomial");
    const Field& field = f.field();
    QuotAlg A(f);
    std::vector<RealisationEntry> out;
    for (const Poly& rep : A.square_class_reps()) {
        RealisationEntry entry{rep, std::nullopt};
        for (uint64_t i = 0; i < field->q(); ++i) {
            Fq a = field->element(i);
            if (f.eval(a).is_zero()) continue;
            Poly lin = Poly::X(field) - Poly::constant(a);
            if (A.same_square_class(lin, rep)) {
                entry.a = a;
                break;
            }
        }
        out.push_back(std::move(entry));
    }
    return out;
}

}  // namespace qfx
