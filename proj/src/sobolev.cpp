#include "sobolev2d/sobolev.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "sobolev2d/errors.hpp"

namespace sobolev2d {

namespace {

Rational R(long v) { return Rational(v); }

std::size_t sz(int v) { return static_cast<std::size_t>(v); }

void require_degree(int max_degree)
{
    if (max_degree < 1) throw std::out_of_range("the Sobolev basis needs max_degree >= 1");
}

RationalMatrix checked_inverse(const RationalMatrix& h, int n)
{
    if (!h.is_positive_definite())
        throw InvariantViolation("H_hat_" + std::to_string(n) + " is not symmetric positive definite: " + h.str());
    try {
        return inverse(h);
    } catch (const std::domain_error&) {
        throw InvariantViolation("H_hat_" + std::to_string(n) + " is singular");
    }
}

}  // namespace

std::vector<DegreeBlock> iterate(const ProductWeight& pw, int max_degree)
{
    require_degree(max_degree);
    const ProductBasis pb(pw, max_degree);
    const bool laguerre = pw.kind() == FamilyKind::Laguerre;

    std::vector<DegreeBlock> blocks;
    std::vector<RationalMatrix> c_hats;  // c_hats[n-1] = C_hat_n
    for (int n = 1; n <= max_degree; ++n) {
        auto dc = pb.matrices(n);
        DegreeBlock block;
        block.degree = n;
        block.d = dc.d;
        block.c = dc.c;

        if (n == 1) {
            block.h_hat = RationalMatrix(0, 0);
        } else if (laguerre) {
            // H_hat_n = D_hat_n - C_hat_{n-1} A_hat_{n-1}^T
            const auto& a_prev = blocks[sz(n - 2)].coupling;
            block.h_hat = dc.d_hat - c_hats[sz(n - 2)] * a_prev.transpose();
        } else if (n == 2) {
            block.h_hat = dc.d_hat;
        } else {
            // H_hat_n = D_hat_n - C_hat_{n-2} B_hat_{n-2}^T
            const auto& b_prev = blocks[sz(n - 3)].coupling;
            block.h_hat = dc.d_hat - c_hats[sz(n - 3)] * b_prev.transpose();
        }
        // A_hat_n = C_hat_n H_hat_n^{-1}, B_hat_n likewise.
        block.coupling = dc.c_hat * checked_inverse(block.h_hat, n);
        c_hats.push_back(std::move(dc.c_hat));
        blocks.push_back(std::move(block));
    }
    return blocks;
}

std::vector<std::vector<BiPoly>> assemble(const ProductWeight& pw, const std::vector<DegreeBlock>& blocks)
{
    const int max_degree = static_cast<int>(blocks.size());
    require_degree(max_degree);
    const ProductBasis pb(pw, max_degree);
    const bool laguerre = pw.kind() == FamilyKind::Laguerre;
    const Rational two_b1_beta = R(2) * pb.b_y(1);
    const Rational two_b1_alpha = R(2) * pb.b_x(1);

    std::vector<std::vector<BiPoly>> result;
    for (int n = 1; n <= max_degree; ++n) {
        if (blocks[sz(n - 1)].degree != n) throw std::invalid_argument("assemble: blocks out of order");
        std::vector<BiPoly> s(sz(n + 1));
        s[0] = pb.Q(n, 0);
        s[sz(n)] = pb.Q(n, n);
        for (int k = 1; k <= n - 1; ++k) {
            BiPoly sk = pb.Q(n, k);
            if (laguerre) {
                // S_hat_n = Q_hat_n - Q_0^{n-1} e_1 - Q_{n-1}^{n-1} e_{n-1} - A_hat_{n-1} S_hat_{n-1}
                if (k == 1) sk -= pb.Q(n - 1, 0);
                if (k == n - 1) sk -= pb.Q(n - 1, n - 1);
                const auto& a_prev = blocks[sz(n - 2)].coupling;
                const auto& s_prev = result[sz(n - 2)];
                for (std::size_t c = 0; c < a_prev.cols(); ++c)
                    if (!a_prev(sz(k - 1), c).is_zero()) sk -= s_prev[c + 1] * a_prev(sz(k - 1), c);
            } else if (n >= 3) {
                // S_hat_n = Q_hat_n - 2 b_1(beta) Q_0^{n-2} e_2 - 2 b_1(alpha) Q_{n-2}^{n-2} e_{n-2}
                //           - B_hat_{n-2} S_hat_{n-2}
                if (k == 2) sk -= pb.Q(n - 2, 0) * two_b1_beta;
                if (k == n - 2) sk -= pb.Q(n - 2, n - 2) * two_b1_alpha;
                const auto& b_prev = blocks[sz(n - 3)].coupling;
                const auto& s_prev = result[sz(n - 3)];
                for (std::size_t c = 0; c < b_prev.cols(); ++c)
                    if (!b_prev(sz(k - 1), c).is_zero()) sk -= s_prev[c + 1] * b_prev(sz(k - 1), c);
            }
            s[sz(k)] = sk.with_degree(n);
        }
        result.push_back(std::move(s));
    }
    return result;
}

std::vector<DegreeBlock> build_blocks(const ProductWeight& pw, int max_degree)
{
    auto blocks = iterate(pw, max_degree);
    auto bases = assemble(pw, blocks);
    for (std::size_t i = 0; i < blocks.size(); ++i) blocks[i].basis = std::move(bases[i]);
    return blocks;
}

SobolevBasis corner_shift(const ProductWeight& pw, std::vector<DegreeBlock> blocks, const Rational& lambda)
{
    if (lambda.sign() <= 0) throw ParameterError("lambda must be positive, got " + lambda.str());
    const auto& c = pw.corner();
    SobolevBasis out{pw, lambda, static_cast<int>(blocks.size()), {}, {}};
    out.shifted.push_back({BiPoly::constant(1)});
    for (const auto& block : blocks) {
        if (static_cast<int>(block.basis.size()) != block.degree + 1)
            throw std::invalid_argument("corner_shift: block " + std::to_string(block.degree) + " is not assembled");
        std::vector<BiPoly> level;
        for (const auto& s : block.basis) level.push_back(s - BiPoly::constant(s(c.x, c.y)));
        out.shifted.push_back(std::move(level));
    }
    out.blocks = std::move(blocks);
    return out;
}

SobolevBasis build_sobolev_basis(const ProductWeight& pw, int max_degree, const Rational& lambda)
{
    if (lambda.sign() <= 0) throw ParameterError("lambda must be positive, got " + lambda.str());
    return corner_shift(pw, build_blocks(pw, max_degree), lambda);
}

std::vector<RationalMatrix> full_gram_recursion(const ProductWeight& pw, int max_degree)
{
    require_degree(max_degree);
    const ProductBasis pb(pw, max_degree);
    const int step = pw.kind() == FamilyKind::Laguerre ? 1 : 2;
    std::vector<RationalMatrix> h;
    std::vector<RationalMatrix> c;
    for (int n = 1; n <= max_degree; ++n) {
        auto dc = pb.matrices(n);
        if (n - step < 1) {
            h.push_back(dc.d);
        } else {
            const auto& c_prev = c[sz(n - step - 1)];
            h.push_back(dc.d - c_prev * inverse(h[sz(n - step - 1)]) * c_prev.transpose());
        }
        c.push_back(std::move(dc.c));
    }
    return h;
}

RationalMatrix embed_h_hat(const DegreeBlock& block)
{
    const auto n = sz(block.degree);
    RationalMatrix h(n + 1, n + 1);
    h(0, 0) = block.d(0, 0);
    h(n, n) = block.d(n, n);
    for (std::size_t r = 0; r + 1 < n; ++r)
        for (std::size_t c = 0; c + 1 < n; ++c) h(r + 1, c + 1) = block.h_hat(r, c);
    return h;
}

// ---------------------------------------------------------------------------

LatticeSolution laguerre_lattice_solve(const ProductWeight& pw, int n, int k)
{
    if (pw.kind() != FamilyKind::Laguerre) throw ParameterError("the lattice system is specific to Laguerre weights");
    if (n < 2 || k < 1 || k > n - 1)
        throw std::out_of_range("laguerre_linear_solve requires 1 <= k <= n-1, got n=" + std::to_string(n) +
                                ", k=" + std::to_string(k));
    const Rational& alpha = pw.alpha();
    const Rational& beta = pw.beta();

    // Unknowns a_l^m for 1 <= m <= n-1, 0 <= l <= m; a^n = 0.
    std::vector<std::vector<int>> index(sz(n));
    int unknowns = 0;
    for (int m = 1; m <= n - 1; ++m)
        for (int l = 0; l <= m; ++l) index[sz(m)].push_back(unknowns++);
    auto col = [&](int l, int m) { return sz(index[sz(m)][sz(l)]); };
    auto inside = [&](int l, int m) { return m >= 1 && m <= n - 1 && l >= 0 && l <= m; };

    RationalMatrix lhs(sz(unknowns), sz(unknowns));
    RationalMatrix rhs(sz(unknowns), 1);
    auto d = [](int a, int b) { return a == b ? R(1) : R(0); };
    for (int m = 1; m <= n - 1; ++m) {
        const Rational last_level = d(m, n - 1);
        for (int l = 0; l <= m; ++l) {
            const std::size_t row = col(l, m);
            auto add = [&](int ll, int mm, const Rational& v) {
                if (inside(ll, mm) && !v.is_zero()) lhs(row, col(ll, mm)) += v;
            };
            if (l == 0) {
                // a_0^m + a_1^{m+1} = -delta_{k,1} delta_{m,n-1}
                add(0, m, R(1));
                add(1, m + 1, R(1));
                rhs(row, 0) = -d(k, 1) * last_level;
            } else if (l == m) {
                // a_m^m + a_m^{m+1} = -delta_{k,m} delta_{m,n-1}
                add(m, m, R(1));
                add(m, m + 1, R(1));
                rhs(row, 0) = -d(k, m) * last_level;
            } else {
                const Rational L(l);
                const Rational ml(m - l);
                add(l - 1, m - 1, ml);
                add(l, m - 1, L);
                add(l, m, L * alpha + ml * beta + R(4) * L * ml);
                add(l, m + 1, L * R(m - l + 1) * (alpha + ml));
                add(l + 1, m + 1, R(l + 1) * ml * (beta + L));
                rhs(row, 0) = -(R(l + 1) * ml * (beta + L) * d(k, l + 1) + L * R(m + 1 - l) * (alpha + ml) * d(k, l)) *
                              last_level;
            }
        }
    }

    RationalMatrix x;
    try {
        x = solve(lhs, rhs);
    } catch (const std::domain_error&) {
        throw InvariantViolation("the Laguerre lattice system is singular for n=" + std::to_string(n) +
                                 ", k=" + std::to_string(k));
    }

    LatticeSolution out;
    out.n = n;
    out.k = k;
    out.a.assign(sz(n), {});
    out.a[0] = {R(0)};
    for (int m = 1; m <= n - 1; ++m)
        for (int l = 0; l <= m; ++l) out.a[sz(m)].push_back(x(col(l, m), 0));

    const ProductBasis pb(pw, n);
    auto a = [&](int l, int m) -> const Rational& { return out.coefficient(l, m); };

    BiPoly direct = pb.Q(n, k);
    for (int j = 1; j <= n - 1; ++j)
        for (int i = 0; i <= j; ++i)
            if (!a(i, j).is_zero()) direct += pb.Q(j, i) * a(i, j);

    // Grouped form: the edge coefficients of level j+1 are tied to the
    // edges of level j by a_1^{j+1} = -a_0^j and a_j^{j+1} = -a_j^j. At
    // j = 1 both relations name the same coefficient a_1^2.
    BiPoly grouped = pb.Q(n, k);
    grouped += pb.Q(n - 1, 0) * a(0, n - 1);
    grouped += pb.Q(n - 1, n - 1) * a(n - 1, n - 1);
    for (int j = 1; j <= n - 2; ++j) {
        grouped += (pb.Q(j, 0) - pb.Q(j + 1, 1)) * a(0, j);
        grouped += pb.Q(j, j) * a(j, j);
        if (j >= 2) grouped -= pb.Q(j + 1, j) * a(j, j);
    }
    for (int j = 4; j <= n - 1; ++j)
        for (int l = 2; l <= j - 2; ++l) grouped += pb.Q(j, l) * a(l, j);

    out.polynomial = grouped.with_degree(n);
    out.direct_sum = direct.with_degree(n);
    return out;
}

BiPoly laguerre_linear_solve(const ProductWeight& pw, int n, int k) { return laguerre_lattice_solve(pw, n, k).polynomial; }

}  // namespace sobolev2d
