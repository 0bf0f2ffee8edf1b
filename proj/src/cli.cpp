#include "sobolev2d/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sobolev2d/document.hpp"
#include "sobolev2d/errors.hpp"
#include "sobolev2d/sobolev.hpp"
#include "sobolev2d/verify.hpp"

namespace sobolev2d {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

/// Error in user input that maps to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string trim(const std::string& s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

Rational parse_flag(const std::string& flag, const std::string& text)
{
    try {
        return Rational::parse(trim(text));
    } catch (const std::invalid_argument& e) {
        throw UsageError("--" + flag + ": " + e.what());
    }
}

Corner parse_corner(const std::string& text)
{
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw UsageError("--corner expects c1,c2");
    return {parse_flag("corner", text.substr(0, comma)), parse_flag("corner", text.substr(comma + 1))};
}

struct GenerateArgs {
    std::string family;
    std::string alpha;
    std::string beta;
    int max_degree = 0;
    std::string corner;
    std::string lambda = "1";
    std::string out;
    std::string format = "json";
};

struct VerifyArgs {
    std::string in;
    int oracle_max_degree = 6;
    std::string lambda_alt = "7";
};

struct EvalArgs {
    std::string in;
    int degree = 0;
    int index = 0;
    std::string points;
    int digits = 17;
    std::string out;
};

int cmd_generate(const GenerateArgs& a, std::ostream& out)
{
    const FamilyKind kind = parse_family_kind(a.family);
    const Rational alpha = parse_flag("alpha", a.alpha);
    const Rational beta = parse_flag("beta", a.beta);
    const Rational lambda = parse_flag("lambda", a.lambda);
    if (a.max_degree < 1) throw UsageError("--max-degree must be at least 1");
    const Corner corner = a.corner.empty() ? ProductWeight::default_corner(kind) : parse_corner(a.corner);
    const ProductWeight pw(WeightFamily(kind, alpha), WeightFamily(kind, beta), corner);

    const BasisDocument doc = make_document(build_sobolev_basis(pw, a.max_degree, lambda));
    write_document(doc, a.out);
    out << "wrote " << a.out << ": " << to_string(kind) << " alpha=" << alpha << " beta=" << beta
        << " degrees 0.." << a.max_degree << "\n";
    return kExitOk;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err)
{
    VerifyOptions options;
    options.oracle_max_degree = a.oracle_max_degree;
    options.lambda_alt = parse_flag("lambda-alt", a.lambda_alt);
    if (options.oracle_max_degree < 0) throw UsageError("--oracle-max-degree must be non-negative");
    if (options.lambda_alt.sign() <= 0) throw UsageError("--lambda-alt must be positive");

    const BasisDocument doc = read_document(a.in);
    const VerifyReport report = verify_document(doc, options);
    out << report.table();
    if (report.all_passed()) {
        out << "all checks passed\n";
        return kExitOk;
    }
    for (const auto& c : report.checks)
        if (!c.passed) {
            err << "first failure: " << c.name << ": " << c.detail << "\n";
            break;
        }
    return kExitFailure;
}

struct Point {
    std::string x_text;
    std::string y_text;
    Rational x;
    Rational y;
};

std::vector<Point> read_points(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open points file " + path);
    std::vector<Point> points;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty()) continue;
        const auto comma = t.find(',');
        if (comma == std::string::npos || t.find(',', comma + 1) != std::string::npos)
            throw UsageError(path + ":" + std::to_string(line_no) + ": expected x,y");
        Point p{trim(t.substr(0, comma)), trim(t.substr(comma + 1)), {}, {}};
        try {
            p.x = Rational::parse(p.x_text);
            p.y = Rational::parse(p.y_text);
        } catch (const std::invalid_argument&) {
            if (points.empty() && line_no == 1) continue;  // header line
            throw UsageError(path + ":" + std::to_string(line_no) + ": malformed point '" + t + "'");
        }
        points.push_back(std::move(p));
    }
    return points;
}

int cmd_eval(const EvalArgs& a, std::ostream& out)
{
    if (a.digits < 1) throw UsageError("--digits must be positive");
    const BasisDocument doc = read_document(a.in);
    if (a.degree < 0 || a.degree > doc.max_degree)
        throw UsageError("--degree must lie in 0.." + std::to_string(doc.max_degree));
    if (a.index < 0 || a.index > a.degree) throw UsageError("--index must lie in 0.." + std::to_string(a.degree));
    const BiPoly& f = doc.degrees[static_cast<std::size_t>(a.degree)].shifted[static_cast<std::size_t>(a.index)];
    const auto points = read_points(a.points);

    std::ostringstream csv;
    csv << "x,y,value\n";
    for (const auto& p : points) csv << p.x_text << "," << p.y_text << "," << f(p.x, p.y).to_decimal(a.digits) << "\n";
    if (a.out.empty()) {
        out << csv.str();
    } else {
        std::ofstream file(a.out, std::ios::binary);
        if (!file) throw std::runtime_error("cannot open " + a.out + " for writing");
        file << csv.str();
    }
    return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact monic Sobolev orthogonal bases on product domains", "sobolev2d"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    GenerateArgs gen;
    auto* generate = app.add_subcommand("generate", "Build a basis and write it as JSON");
    generate->add_option("--family", gen.family, "laguerre or gegenbauer")->required();
    generate->add_option("--alpha", gen.alpha, "x parameter (p/q)")->required();
    generate->add_option("--beta", gen.beta, "y parameter (p/q)")->required();
    generate->add_option("--max-degree", gen.max_degree, "highest total degree N")->required();
    generate->add_option("--corner", gen.corner, "evaluation point c1,c2");
    generate->add_option("--lambda", gen.lambda, "weight of the point term (p/q)")->capture_default_str();
    generate->add_option("--out", gen.out, "output file")->required();
    generate->add_option("--format", gen.format, "output format")->check(CLI::IsMember({"json"}))->capture_default_str();

    VerifyArgs ver;
    auto* verify = app.add_subcommand("verify", "Re-derive a basis file and check it against the oracle");
    verify->add_option("--in", ver.in, "basis file")->required();
    verify->add_option("--oracle-max-degree", ver.oracle_max_degree, "degree cap for oracle checks")->capture_default_str();
    verify->add_option("--lambda-alt", ver.lambda_alt, "second lambda for invariance checks")->capture_default_str();

    EvalArgs ev;
    auto* eval = app.add_subcommand("eval", "Evaluate one shifted basis polynomial at points");
    eval->add_option("--in", ev.in, "basis file")->required();
    eval->add_option("--degree", ev.degree, "total degree n")->required();
    eval->add_option("--index", ev.index, "index k in 0..n")->required();
    eval->add_option("--points", ev.points, "CSV file with x,y per line")->required();
    eval->add_option("--digits", ev.digits, "significant digits")->capture_default_str();
    eval->add_option("--out", ev.out, "output CSV file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (generate->parsed()) return cmd_generate(gen, out);
        if (verify->parsed()) return cmd_verify(ver, out, err);
        if (eval->parsed()) return cmd_eval(ev, out);
    } catch (const InvariantViolation& e) {
        err << "error: invariant violated: " << e.what() << "\n";
        return kExitFailure;
    } catch (const SingularParameterError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DocumentError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}

}  // namespace sobolev2d
