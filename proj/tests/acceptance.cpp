// Acceptance suite: one PASS/FAIL line per criterion. Exits non-zero if
// any criterion fails.

#include <chrono>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sobolev2d/cli.hpp"
#include "sobolev2d/oracle.hpp"
#include "sobolev2d/sobolev.hpp"

using namespace sobolev2d;

namespace {

Rational q(const char* s) { return Rational::parse(s); }

BiPoly poly(std::initializer_list<std::tuple<int, int, Rational>> terms)
{
    BiPoly f;
    for (const auto& [i, j, c] : terms) f += BiPoly::monomial(i, j, c);
    return f;
}

struct Named {
    std::string name;
    ProductWeight pw;
};

std::vector<Named> parameter_sets()
{
    return {{"laguerre(0,0)", ProductWeight::laguerre(0, 0)},
            {"laguerre(1/2,3/2)", ProductWeight::laguerre(q("1/2"), q("3/2"))},
            {"gegenbauer(1,1)", ProductWeight::gegenbauer(1, 1)},
            {"gegenbauer(3/2,1/2)", ProductWeight::gegenbauer(q("3/2"), q("1/2"))}};
}

/// Collects mismatches; the criterion passes when none were recorded.
class Ledger {
public:
    void expect(bool ok, const std::string& what)
    {
        ++checks_;
        if (!ok) failures_.push_back(what);
    }

    void expect_matrix(const std::string& label, const RationalMatrix& got, const RationalMatrix& want)
    {
        if (got.rows() != want.rows() || got.cols() != want.cols()) {
            expect(false, label + " has shape " + std::to_string(got.rows()) + "x" + std::to_string(got.cols()));
            return;
        }
        for (std::size_t r = 0; r < got.rows(); ++r)
            for (std::size_t c = 0; c < got.cols(); ++c)
                expect(got(r, c) == want(r, c), label + "[" + std::to_string(r) + "][" + std::to_string(c) + "] = " +
                                                    got(r, c).str() + ", expected " + want(r, c).str());
    }

    bool ok() const { return failures_.empty(); }
    int checks() const { return checks_; }
    const std::vector<std::string>& failures() const { return failures_; }

    std::string summary() const
    {
        std::ostringstream os;
        os << checks_ - static_cast<int>(failures_.size()) << "/" << checks_ << " checks";
        for (std::size_t i = 0; i < failures_.size() && i < 4; ++i) os << "; " << failures_[i];
        if (failures_.size() > 4) os << "; ...";
        return os.str();
    }

private:
    int checks_ = 0;
    std::vector<std::string> failures_;
};

struct Outcome {
    bool pass;
    std::string detail;
};

Outcome ac1()
{
    const auto b = iterate(ProductWeight::laguerre(0, 0), 4);
    Ledger l;
    l.expect_matrix("A_hat_2", b[1].coupling, RationalMatrix{{1}, {1}});
    l.expect_matrix("H_hat_2", b[1].h_hat, RationalMatrix{{2}});
    l.expect_matrix("A_hat_3", b[2].coupling, RationalMatrix{{5, 1}, {5, 5}, {1, 5}} * q("1/4"));
    l.expect_matrix("H_hat_3", b[2].h_hat, RationalMatrix{{10, -2}, {-2, 10}});
    l.expect_matrix("A_hat_4", b[3].coupling,
                    RationalMatrix{{90, 24, 6}, {53, 72, 11}, {11, 72, 53}, {6, 24, 90}} * q("1/56"));
    l.expect_matrix("H_hat_4", b[3].h_hat, RationalMatrix{{93, -12, -3}, {-12, 48, -12}, {-3, -12, 93}});
    return {l.ok(), l.summary()};
}

Outcome ac2()
{
    const auto b = build_blocks(ProductWeight::laguerre(0, 0), 3);
    auto S = [&](int n, int k) { return b[static_cast<std::size_t>(n - 1)].basis[static_cast<std::size_t>(k)]; };
    Ledger l;
    l.expect(S(1, 0) == poly({{1, 0, 1}}), "S_0^1 = " + S(1, 0).str());
    l.expect(S(2, 0) == poly({{2, 0, 1}, {1, 0, -2}}), "S_0^2 = " + S(2, 0).str());
    l.expect(S(2, 1) == poly({{1, 1, 1}, {1, 0, -1}, {0, 1, -1}}), "S_1^2 = " + S(2, 1).str());
    l.expect(S(3, 0) == poly({{3, 0, 1}, {2, 0, -6}, {1, 0, 6}}), "S_0^3 = " + S(3, 0).str());
    l.expect(S(3, 1) == poly({{2, 1, 1}, {2, 0, -1}, {1, 1, -3}, {1, 0, 3}, {0, 1, 1}}), "S_1^3 = " + S(3, 1).str());
    return {l.ok(), l.summary()};
}

Outcome ac3()
{
    const auto b = iterate(ProductWeight::gegenbauer(1, 1), 4);
    Ledger l;
    l.expect_matrix("B_hat_2", b[1].coupling, RationalMatrix{{1}, {0}, {1}} * q("-1/8"));
    l.expect_matrix("H_hat_2", b[1].h_hat, RationalMatrix{{q("1/2")}});
    l.expect_matrix("B_hat_3", b[2].coupling, RationalMatrix{{1, 0}, {0, 4}, {4, 0}, {0, 1}} * q("-1/20"));
    l.expect_matrix("H_hat_3", b[2].h_hat, RationalMatrix{{1, 0}, {0, 1}} * q("5/16"));
    l.expect_matrix("B_hat_4", b[3].coupling,
                    RationalMatrix{{21, 0, 1}, {0, 110, 0}, {198, 0, 198}, {0, 110, 0}, {1, 0, 21}} * q("-1/880"));
    l.expect_matrix("H_hat_4", b[3].h_hat, RationalMatrix{{21, 0, -1}, {0, 16, 0}, {-1, 0, 21}} * q("1/128"));
    return {l.ok(), l.summary()};
}

Outcome ac4()
{
    const auto basis = build_sobolev_basis(ProductWeight::gegenbauer(1, 1), 4, 1);
    auto S = [&](int n, int k) { return basis.block(n).basis[static_cast<std::size_t>(k)]; };
    Ledger l;
    const Rational quarter = q("1/4");
    auto up_to_const = [&](int n, int k, const BiPoly& want) {
        l.expect(equal_up_to_constant(S(n, k), want), "S_" + std::to_string(k) + "^" + std::to_string(n) + " = " + S(n, k).str());
    };
    up_to_const(1, 0, poly({{1, 0, 1}}));
    up_to_const(2, 0, poly({{2, 0, 1}}));
    up_to_const(2, 1, poly({{1, 1, 1}}));
    up_to_const(3, 0, poly({{3, 0, 1}, {1, 0, q("-3/4")}}));
    up_to_const(3, 1, poly({{2, 1, 1}, {0, 1, -quarter}}));
    up_to_const(4, 0, poly({{4, 0, 1}, {2, 0, -1}}));
    up_to_const(4, 1, poly({{3, 1, 1}, {1, 1, q("-5/8")}}));
    up_to_const(4, 2, poly({{2, 2, 1}, {2, 0, -quarter}, {0, 2, -quarter}}));
    const BiPoly& shifted = basis.shifted[4][2];
    l.expect(shifted == poly({{2, 2, 1}, {2, 0, -quarter}, {0, 2, -quarter}, {0, 0, q("-1/2")}}),
             "shifted S_2^4 = " + shifted.str());
    return {l.ok(), l.summary()};
}

Outcome ac5()
{
    constexpr int N = 6;
    Ledger gs_equal;
    Ledger cross_degree;
    Ledger all_pairs;
    for (const auto& [name, pw] : parameter_sets()) {
        const auto basis = build_sobolev_basis(pw, N, 1);
        const auto gs = gram_schmidt_sobolev(pw, 1, N);
        const InnerProducts ip(pw, N);
        std::vector<std::pair<int, int>> index;
        for (int n = 0; n <= N; ++n)
            for (int k = 0; k <= n; ++k) {
                index.emplace_back(n, k);
                gs_equal.expect(basis.shifted[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] ==
                                    gs[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)],
                                name + " (n,k)=(" + std::to_string(n) + "," + std::to_string(k) + ")");
            }
        for (std::size_t a = 0; a < index.size(); ++a)
            for (std::size_t b = a + 1; b < index.size(); ++b) {
                const auto [n, k] = index[a];
                const auto [m, j] = index[b];
                const Rational v = ip.inner_S(1, basis.shifted[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)],
                                              basis.shifted[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)]);
                const std::string w = name + " (n,k,m,j)=(" + std::to_string(n) + "," + std::to_string(k) + "," +
                                      std::to_string(m) + "," + std::to_string(j) + ") = " + v.str();
                all_pairs.expect(v.is_zero(), w);
                if (n != m) cross_degree.expect(v.is_zero(), w);
            }
    }
    std::ostringstream os;
    os << "Gram-Schmidt equality " << gs_equal.summary() << " | different-degree products zero "
       << cross_degree.summary() << " | all off-diagonal products zero "
       << all_pairs.checks() - static_cast<int>(all_pairs.failures().size()) << "/" << all_pairs.checks();
    if (!all_pairs.ok())
        os << ", nonzero same-degree pairs e.g. " << all_pairs.failures().front();
    return {gs_equal.ok() && all_pairs.ok(), os.str()};
}

Outcome ac6()
{
    Ledger derivative;
    Ledger gram;
    Ledger lambda;
    Ledger swap;
    Ledger route;
    for (const auto& [name, pw] : parameter_sets()) {
        for (const auto& fam : {pw.x_family(), pw.y_family()}) {
            const auto p = monic_sequence(fam, 12);
            const auto qs = q_sequence(fam, 12);
            for (int n = 1; n <= 12; ++n)
                derivative.expect(qs[static_cast<std::size_t>(n)].derivative() == p[static_cast<std::size_t>(n - 1)] * Rational(n),
                                  name + " q_" + std::to_string(n));
        }

        const auto blocks = build_blocks(pw, 8);
        const InnerProducts ip(pw, 6);
        for (int n = 2; n <= 6; ++n) {
            const auto& blk = blocks[static_cast<std::size_t>(n - 1)];
            for (int k = 1; k < n; ++k)
                for (int j = 1; j < n; ++j)
                    gram.expect(ip.inner_nabla(blk.basis[static_cast<std::size_t>(k)], blk.basis[static_cast<std::size_t>(j)]) ==
                                    blk.h_hat(static_cast<std::size_t>(k - 1), static_cast<std::size_t>(j - 1)),
                                name + " H_hat_" + std::to_string(n));
        }

        const auto one = build_sobolev_basis(pw, 6, 1);
        const auto seven = build_sobolev_basis(pw, 6, 7);
        const auto gs1 = gram_schmidt_sobolev(pw, 1, 6);
        const auto gs7 = gram_schmidt_sobolev(pw, 7, 6);
        lambda.expect(one.shifted == seven.shifted, name + " pipeline");
        lambda.expect(gs1 == gs7, name + " Gram-Schmidt");
        lambda.expect(one.shifted == gs7, name + " pipeline vs Gram-Schmidt at 7");

        if (pw.alpha() == pw.beta())
            for (int n = 1; n <= 8; ++n)
                for (int k = 0; k <= n; ++k)
                    swap.expect(blocks[static_cast<std::size_t>(n - 1)].basis[static_cast<std::size_t>(n - k)] ==
                                    blocks[static_cast<std::size_t>(n - 1)].basis[static_cast<std::size_t>(k)].swapped(),
                                name + " (n,k)=(" + std::to_string(n) + "," + std::to_string(k) + ")");

        if (pw.kind() == FamilyKind::Laguerre)
            for (int n = 2; n <= 6; ++n)
                for (int k = 1; k < n; ++k)
                    route.expect(equal_up_to_constant(laguerre_linear_solve(pw, n, k),
                                                      blocks[static_cast<std::size_t>(n - 1)].basis[static_cast<std::size_t>(k)]),
                                 name + " (n,k)=(" + std::to_string(n) + "," + std::to_string(k) + ")");
    }
    std::ostringstream os;
    os << "q' = n p: " << derivative.summary() << " | H_hat Gram: " << gram.summary() << " | lambda: " << lambda.summary()
       << " | swap: " << swap.summary() << " | linear route: " << route.summary();
    return {derivative.ok() && gram.ok() && lambda.ok() && swap.ok() && route.ok(), os.str()};
}

Outcome ac7()
{
    const auto dir = std::filesystem::temp_directory_path() / "sobolev2d_acceptance";
    std::filesystem::create_directories(dir);
    Ledger l;
    std::ostringstream times;
    for (const auto& [name, pw] : parameter_sets()) {
        std::string stem = name;
        for (auto& ch : stem)
            if (ch == '/' || ch == ',') ch = '_';
        const std::string out = (dir / (stem + ".json")).string();
        const std::string family = to_string(pw.kind());
        const std::string alpha = pw.alpha().str();
        const std::string beta = pw.beta().str();
        const char* argv[] = {"sobolev2d", "generate", "--family", family.c_str(), "--alpha", alpha.c_str(),
                              "--beta", beta.c_str(), "--max-degree", "12", "--out", out.c_str()};
        std::ostringstream sink;
        const auto t0 = std::chrono::steady_clock::now();
        const int code = run_cli(static_cast<int>(std::size(argv)), argv, sink, sink);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        l.expect(code == 0, name + " exit code " + std::to_string(code));
        l.expect(secs < 60.0, name + " took " + std::to_string(secs) + " s");
        times << " " << name << "=" << std::fixed << std::setprecision(3) << secs << "s";
    }
    return {l.ok(), l.summary() + ";" + times.str()};
}

}  // namespace

int main()
{
    struct Criterion {
        const char* id;
        double limit_seconds;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {"AC1 Laguerre (0,0) matrices", 1.0, ac1},
        {"AC2 Laguerre (0,0) polynomials", 1.0, ac2},
        {"AC3 Gegenbauer (1,1) matrices", 1.0, ac3},
        {"AC4 Gegenbauer (1,1) polynomials", 1.0, ac4},
        {"AC5 oracle equivalence", 300.0, ac5},
        {"AC6 property suites", 0.0, ac6},
        {"AC7 N=12 generation", 60.0, ac7},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        Outcome o{false, ""};
        const auto t0 = std::chrono::steady_clock::now();
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
            o.pass = false;
            o.detail += "; exceeded " + std::to_string(c.limit_seconds) + " s";
        }
        failed += o.pass ? 0 : 1;
        std::cout << (o.pass ? "PASS " : "FAIL ") << c.id << " [" << std::fixed << std::setprecision(3) << secs
                  << " s] " << o.detail << std::endl;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
    return failed == 0 ? 0 : 1;
}
