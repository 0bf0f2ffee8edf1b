#include "sobolev2d/verify.hpp"

#include <algorithm>
#include <iomanip>
#include <optional>
#include <sstream>

#include "sobolev2d/errors.hpp"
#include "sobolev2d/oracle.hpp"
#include "sobolev2d/product_basis.hpp"
#include "sobolev2d/sobolev.hpp"

namespace sobolev2d {

namespace {

using Witness = std::optional<std::string>;

std::string nk(int n, int k) { return "(n,k)=(" + std::to_string(n) + "," + std::to_string(k) + ")"; }

std::string nkmj(int n, int k, int m, int j)
{
    return "(n,k,m,j)=(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(m) + "," +
           std::to_string(j) + ")";
}

Witness compare_matrix(const std::string& label, int n, const RationalMatrix& got, const RationalMatrix& want)
{
    if (got.rows() != want.rows() || got.cols() != want.cols())
        return label + "_" + std::to_string(n) + " has shape " + std::to_string(got.rows()) + "x" +
               std::to_string(got.cols()) + ", expected " + std::to_string(want.rows()) + "x" +
               std::to_string(want.cols());
    for (std::size_t r = 0; r < got.rows(); ++r)
        for (std::size_t c = 0; c < got.cols(); ++c)
            if (got(r, c) != want(r, c))
                return label + "_" + std::to_string(n) + "[" + std::to_string(r) + "][" + std::to_string(c) +
                       "] = " + got(r, c).str() + ", expected " + want(r, c).str();
    return std::nullopt;
}

CheckResult make(const std::string& name, const Witness& w, const std::string& ok_note = "")
{
    return CheckResult{name, !w.has_value(), true, w.value_or(ok_note)};
}

CheckResult skipped(const std::string& name, const std::string& why) { return CheckResult{name, true, false, why}; }

Witness check_rederived(const BasisDocument& doc, const SobolevBasis& fresh)
{
    for (int n = 0; n <= doc.max_degree; ++n) {
        const auto& deg = doc.degrees[static_cast<std::size_t>(n)];
        for (int k = 0; k <= n; ++k) {
            const auto kk = static_cast<std::size_t>(k);
            const BiPoly& want_basis = n == 0 ? fresh.shifted[0][0] : fresh.block(n).basis[kk];
            if (!(deg.basis[kk] == want_basis)) return "basis " + nk(n, k) + " differs from the re-derived polynomial";
            if (!(deg.shifted[kk] == fresh.shifted[static_cast<std::size_t>(n)][kk]))
                return "shifted " + nk(n, k) + " differs from the re-derived polynomial";
        }
        if (n == 0) continue;
        const auto& block = fresh.block(n);
        if (auto w = compare_matrix("H_hat", n, deg.h_hat, block.h_hat)) return w;
        if (auto w = compare_matrix("coupling", n, deg.coupling, block.coupling)) return w;
        if (auto w = compare_matrix("D", n, deg.d, block.d)) return w;
        if (auto w = compare_matrix("C", n, deg.c, block.c)) return w;
    }
    return std::nullopt;
}

Witness check_monic(const BasisDocument& doc)
{
    for (int n = 0; n <= doc.max_degree; ++n) {
        const auto& deg = doc.degrees[static_cast<std::size_t>(n)];
        for (int k = 0; k <= n; ++k) {
            const auto kk = static_cast<std::size_t>(k);
            if (!is_monic(deg.basis[kk], n, k)) return "basis " + nk(n, k) + " is not monic";
            if (n > 0 && !is_monic(deg.shifted[kk], n, k)) return "shifted " + nk(n, k) + " is not monic";
        }
    }
    if (!(doc.degrees[0].shifted[0] == BiPoly::constant(1))) return std::string("shifted (n,k)=(0,0) is not 1");
    return std::nullopt;
}

Witness check_corner(const BasisDocument& doc)
{
    const auto& c = doc.corner;
    for (int n = 1; n <= doc.max_degree; ++n) {
        const auto& deg = doc.degrees[static_cast<std::size_t>(n)];
        for (int k = 0; k <= n; ++k) {
            const auto kk = static_cast<std::size_t>(k);
            const Rational v = deg.shifted[kk](c.x, c.y);
            if (!v.is_zero()) return "shifted " + nk(n, k) + " takes the value " + v.str() + " at the corner";
            if (!equal_up_to_constant(deg.shifted[kk], deg.basis[kk]))
                return "shifted " + nk(n, k) + " is not a constant shift of the basis polynomial";
        }
    }
    return std::nullopt;
}

Witness check_nabla_orthogonality(const BasisDocument& doc, const InnerProducts& ip, int cap)
{
    for (int n = 2; n <= cap; ++n)
        for (int m = 1; m < n; ++m)
            for (int k = 0; k <= n; ++k)
                for (int j = 0; j <= m; ++j) {
                    const Rational v = ip.inner_nabla(doc.degrees[static_cast<std::size_t>(n)].basis[static_cast<std::size_t>(k)],
                                                      doc.degrees[static_cast<std::size_t>(m)].basis[static_cast<std::size_t>(j)]);
                    if (!v.is_zero()) return nkmj(n, k, m, j) + ": gradient product " + v.str();
                }
    return std::nullopt;
}

RationalMatrix oracle_gram(const std::vector<BiPoly>& fs, const InnerProducts& ip)
{
    RationalMatrix g(fs.size(), fs.size());
    for (std::size_t r = 0; r < fs.size(); ++r)
        for (std::size_t c = r; c < fs.size(); ++c) g(r, c) = g(c, r) = ip.inner_nabla(fs[r], fs[c]);
    return g;
}

Witness check_gram_identity(const BasisDocument& doc, const InnerProducts& ip, int cap)
{
    for (int n = 1; n <= cap; ++n) {
        const auto& deg = doc.degrees[static_cast<std::size_t>(n)];
        const RationalMatrix g = oracle_gram(deg.basis, ip);
        const std::vector<BiPoly> interior(deg.basis.begin() + 1, deg.basis.end() - 1);
        if (auto w = compare_matrix("H_hat", n, deg.h_hat, oracle_gram(interior, ip))) return w;
        DegreeBlock block;
        block.degree = n;
        block.h_hat = deg.h_hat;
        block.d = deg.d;
        if (deg.d.rows() != static_cast<std::size_t>(n + 1) || deg.d.cols() != static_cast<std::size_t>(n + 1))
            return "D_" + std::to_string(n) + " has the wrong shape";
        if (auto w = compare_matrix("H", n, g, embed_h_hat(block))) return w;
    }
    return std::nullopt;
}

Witness check_full_recursion(const BasisDocument& doc)
{
    const auto h = full_gram_recursion(doc.weight(), doc.max_degree);
    for (int n = 1; n <= doc.max_degree; ++n) {
        const auto& deg = doc.degrees[static_cast<std::size_t>(n)];
        DegreeBlock block;
        block.degree = n;
        block.h_hat = deg.h_hat;
        block.d = deg.d;
        if (deg.h_hat.rows() != static_cast<std::size_t>(n - 1) || deg.d.rows() != static_cast<std::size_t>(n + 1))
            return "matrices of degree " + std::to_string(n) + " have the wrong shape";
        if (auto w = compare_matrix("H", n, embed_h_hat(block), h[static_cast<std::size_t>(n - 1)])) return w;
    }
    return std::nullopt;
}

Witness check_s_orthogonality(const BasisDocument& doc, const InnerProducts& ip, const Rational& lambda, int cap)
{
    for (int n = 1; n <= cap; ++n) {
        const auto& deg = doc.degrees[static_cast<std::size_t>(n)];
        const auto inner = static_cast<std::size_t>(n - 1);
        const auto full = static_cast<std::size_t>(n + 1);
        if (deg.h_hat.rows() != inner || deg.h_hat.cols() != inner || deg.d.rows() != full || deg.d.cols() != full)
            return "matrices of degree " + std::to_string(n) + " have the wrong shape";
    }
    for (int n = 0; n <= cap; ++n)
        for (int m = 0; m <= n; ++m)
            for (int k = 0; k <= n; ++k)
                for (int j = 0; j <= m; ++j) {
                    if (m == n && j < k) continue;
                    const auto& f = doc.degrees[static_cast<std::size_t>(n)].shifted[static_cast<std::size_t>(k)];
                    const auto& g = doc.degrees[static_cast<std::size_t>(m)].shifted[static_cast<std::size_t>(j)];
                    const Rational v = ip.inner_S(lambda, f, g);
                    if (m != n) {
                        if (!v.is_zero()) return nkmj(n, k, m, j) + ": Sobolev product " + v.str() + " at lambda " + lambda.str();
                        continue;
                    }
                    // Same degree: the corner term vanishes, leaving the gradient Gram matrix.
                    Rational want;
                    if (n == 0) {
                        want = lambda;
                    } else {
                        const auto& deg = doc.degrees[static_cast<std::size_t>(n)];
                        if (k == 0 || k == n || j == 0 || j == n) {
                            want = k == j ? deg.d(static_cast<std::size_t>(k), static_cast<std::size_t>(k)) : Rational(0);
                        } else {
                            want = deg.h_hat(static_cast<std::size_t>(k - 1), static_cast<std::size_t>(j - 1));
                        }
                    }
                    if (v != want)
                        return nkmj(n, k, m, j) + ": Sobolev product " + v.str() + ", expected " + want.str() +
                               " at lambda " + lambda.str();
                }
    return std::nullopt;
}

Witness check_gram_schmidt(const BasisDocument& doc, const Rational& lambda, int cap)
{
    const auto gs = gram_schmidt_sobolev(doc.weight(), lambda, cap);
    for (int n = 0; n <= cap; ++n)
        for (int k = 0; k <= n; ++k)
            if (!(gs[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] ==
                  doc.degrees[static_cast<std::size_t>(n)].shifted[static_cast<std::size_t>(k)]))
                return nk(n, k) + ": Gram-Schmidt at lambda " + lambda.str() + " gives " +
                       gs[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)].str();
    return std::nullopt;
}

Witness check_swap(const BasisDocument& doc, bool shifted_too)
{
    for (int n = 1; n <= doc.max_degree; ++n) {
        const auto& deg = doc.degrees[static_cast<std::size_t>(n)];
        for (int k = 0; k <= n; ++k) {
            const auto a = static_cast<std::size_t>(k);
            const auto b = static_cast<std::size_t>(n - k);
            if (!(deg.basis[b] == deg.basis[a].swapped())) return "basis " + nk(n, k) + " is not the mirror of " + nk(n, n - k);
            if (shifted_too && !(deg.shifted[b] == deg.shifted[a].swapped()))
                return "shifted " + nk(n, k) + " is not the mirror of " + nk(n, n - k);
        }
    }
    return std::nullopt;
}

Witness check_laguerre_route(const BasisDocument& doc, int cap)
{
    const ProductWeight pw = doc.weight();
    for (int n = 2; n <= cap; ++n)
        for (int k = 1; k <= n - 1; ++k) {
            const auto sol = laguerre_lattice_solve(pw, n, k);
            if (!(sol.polynomial == sol.direct_sum)) return nk(n, k) + ": grouped and direct lattice sums differ";
            if (!equal_up_to_constant(sol.polynomial, doc.degrees[static_cast<std::size_t>(n)].basis[static_cast<std::size_t>(k)]))
                return nk(n, k) + ": lattice route gives " + sol.polynomial.str();
        }
    return std::nullopt;
}

Witness check_closed_form(const BasisDocument& doc, const InnerProducts& ip, int cap)
{
    const ProductBasis pb(doc.weight(), cap);
    for (int n = 1; n <= cap; ++n)
        for (int m = 1; m <= n; ++m)
            for (int i = 0; i <= n; ++i)
                for (int l = 0; l <= m; ++l) {
                    const Rational closed = pb.grad_gram(n, i, m, l);
                    const Rational direct = ip.inner_nabla(pb.Q(n, i), pb.Q(m, l));
                    if (closed != direct)
                        return nkmj(n, i, m, l) + ": closed form " + closed.str() + ", integral " + direct.str();
                }
    return std::nullopt;
}

}  // namespace

bool VerifyReport::all_passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* VerifyReport::find(const std::string& name) const
{
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

std::string VerifyReport::table() const
{
    std::size_t width = 0;
    for (const auto& c : checks) width = std::max(width, c.name.size());
    std::ostringstream os;
    for (const auto& c : checks) {
        os << std::left << std::setw(static_cast<int>(width)) << c.name << "  "
           << (!c.applicable ? "SKIP" : c.passed ? "PASS" : "FAIL");
        if (!c.detail.empty()) os << "  " << c.detail;
        os << "\n";
    }
    return os.str();
}

VerifyReport verify_document(const BasisDocument& doc, const VerifyOptions& options)
{
    if (options.oracle_max_degree < 0) throw ParameterError("oracle-max-degree must be non-negative");
    if (options.lambda_alt.sign() <= 0) throw ParameterError("lambda-alt must be positive");

    const ProductWeight pw = doc.weight();
    const int cap = std::min(options.oracle_max_degree, doc.max_degree);
    const std::string capped = "degrees <= " + std::to_string(cap);
    const InnerProducts ip(pw, std::max(cap, 1));
    const SobolevBasis fresh = build_sobolev_basis(pw, doc.max_degree, doc.lambda);

    VerifyReport report;
    auto& out = report.checks;
    out.push_back(make("rederived", check_rederived(doc, fresh), "degrees <= " + std::to_string(doc.max_degree)));
    out.push_back(make("monic", check_monic(doc)));
    out.push_back(make("corner-zero", check_corner(doc)));
    out.push_back(make("closed-form-gram", check_closed_form(doc, ip, cap), capped));
    out.push_back(make("nabla-orthogonality", check_nabla_orthogonality(doc, ip, cap), capped));
    out.push_back(make("h-hat-gram", check_gram_identity(doc, ip, cap), capped));
    out.push_back(make("full-recursion", check_full_recursion(doc), "degrees <= " + std::to_string(doc.max_degree)));
    out.push_back(make("s-orthogonality", check_s_orthogonality(doc, ip, doc.lambda, cap), capped + ", lambda " + doc.lambda.str()));
    out.push_back(make("s-orthogonality-alt", check_s_orthogonality(doc, ip, options.lambda_alt, cap),
                       capped + ", lambda " + options.lambda_alt.str()));
    out.push_back(make("gram-schmidt", check_gram_schmidt(doc, doc.lambda, cap), capped + ", lambda " + doc.lambda.str()));
    out.push_back(make("lambda-invariance", check_gram_schmidt(doc, options.lambda_alt, cap),
                       capped + ", lambda " + options.lambda_alt.str()));
    if (doc.alpha == doc.beta)
        out.push_back(make("swap-symmetry", check_swap(doc, doc.corner.x == doc.corner.y)));
    else
        out.push_back(skipped("swap-symmetry", "alpha != beta"));
    if (doc.family == FamilyKind::Laguerre)
        out.push_back(make("laguerre-route", check_laguerre_route(doc, cap), capped));
    else
        out.push_back(skipped("laguerre-route", "Laguerre weights only"));
    return report;
}

}  // namespace sobolev2d
