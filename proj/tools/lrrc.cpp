#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "lrrc/bijection.hpp"
#include "lrrc/errors.hpp"
#include "lrrc/io.hpp"
#include "lrrc/kostka.hpp"
#include "lrrc/lr.hpp"
#include "lrrc/rigged.hpp"
#include "lrrc/verify.hpp"

using namespace lrrc;

namespace {

enum Exit { kOk = 0, kUsage = 1, kMath = 2, kViolation = 3 };

// Usage errors are thrown as this type so they map to exit 1.
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Partition lambda_arg(const std::string& s)
{
    try {
        return parse_partition(s);
    } catch (const std::exception& e) {
        throw usage_error(e.what());
    }
}

RectSeq rects_arg(const std::string& s)
{
    try {
        return parse_rects(s);
    } catch (const std::exception& e) {
        throw usage_error(e.what());
    }
}

json read_json_file(const std::string& path)
{
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path);
        if (!in)
            throw usage_error("cannot open " + path);
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw usage_error(std::string("invalid JSON: ") + e.what());
    }
}

std::string format_configuration(const Configuration& nu)
{
    std::ostringstream os;
    for (std::size_t k = 0; k < nu.size(); ++k)
        os << (k ? " | " : "") << (nu[k].empty() ? "." : format_partition(nu[k]));
    if (nu.empty())
        os << "(empty)";
    return os.str();
}

int cmd_enumerate(const std::string& kind, const std::string& lam_s, const std::string& rects_s,
                  bool count, bool as_json)
{
    Partition lambda = lambda_arg(lam_s);
    RectSeq rects = rects_arg(rects_s);
    bool match = total(lambda) == total(rects);
    json out = json::array();
    std::string text;
    std::size_t n = 0;
    if (kind == "clr") {
        std::vector<Tableau> ts;
        if (match)
            ts = enumerate_clr(lambda, rects);
        n = ts.size();
        for (const auto& t : ts)
            out.push_back(to_json(t));
        text = format_tableaux(ts);
    } else if (kind == "rc") {
        std::vector<RiggedConfig> rcs;
        if (match)
            rcs = enumerate_rcs(lambda, rects);
        n = rcs.size();
        for (std::size_t i = 0; i < rcs.size(); ++i) {
            out.push_back(to_json(rcs[i]));
            text += (i ? "\n" : "") + format_rc(rcs[i]);
        }
    } else {
        std::vector<Configuration> cs;
        if (match)
            cs = enumerate_configs(lambda, rects);
        n = cs.size();
        for (const auto& c : cs) {
            out.push_back(c);
            text += format_configuration(c) + "\n";
        }
    }
    if (count) {
        if (as_json)
            std::cout << json{{"count", n}}.dump() << "\n";
        else
            std::cout << n << "\n";
    } else if (as_json) {
        std::cout << json{{"lambda", lambda}, {"rects", to_json(rects)}, {"items", out}}.dump(2) << "\n";
    } else {
        std::cout << text;
    }
    return kOk;
}

int cmd_bijection(const std::string& dir, const std::string& path, bool trace, bool coquantum, bool as_json)
{
    json in = read_json_file(path);
    if (dir == "forward") {
        if (!in.contains("rects"))
            throw usage_error("input needs \"rects\" next to the tableau");
        Tableau t;
        RectSeq rects;
        try {
            t = tableau_from_json(in.contains("tableau") ? in["tableau"] : in);
            rects = rects_from_json(in["rects"]);
        } catch (const std::exception& e) {
            throw usage_error(e.what());
        }
        if (!is_standard(t))
            throw math_error("not a standard tableau");
        if (!is_clr(t, t.shape(), rects))
            throw math_error("tableau is not in CLR(" + format_partition(t.shape()) + "; " + format_rects(rects) +
                             "): P(S|B_j) differs from ZC_j");
        BijectionTrace tr;
        RiggedConfig rc = coquantum ? phi_tilde(t, rects) : phi_bar(t, rects, trace ? &tr : nullptr);
        if (as_json) {
            json o = to_json(rc);
            if (trace && !coquantum) {
                json steps = json::array();
                for (const auto& s : tr)
                    steps.push_back(to_json(s));
                o = json{{"result", o}, {"trace", steps}};
            }
            std::cout << o.dump(2) << "\n";
        } else {
            if (trace && !coquantum)
                std::cout << format_trace(tr) << "\n";
            std::cout << format_rc(rc);
        }
        return kOk;
    }
    RiggedConfig rc;
    try {
        rc = rc_from_json(in.contains("rc") ? in["rc"] : in);
    } catch (const std::exception& e) {
        throw usage_error(e.what());
    }
    Tableau t = coquantum ? phi_tilde_inv(rc) : phi_bar_inv(rc);
    if (as_json)
        std::cout << json{{"rects", to_json(rc.rects)}, {"tableau", to_json(t)}}.dump(2) << "\n";
    else
        std::cout << format_tableau(t);
    return kOk;
}

int cmd_kostka(const std::string& lam_s, const std::string& rects_s, const std::string& method,
               std::optional<long> at, bool as_json)
{
    Partition lambda = lambda_arg(lam_s);
    RectSeq rects = rects_arg(rects_s);
    bool match = total(lambda) == total(rects);
    std::vector<std::pair<std::string, QPoly>> polys;
    auto compute = [&](const std::string& m) {
        if (!match)
            return QPoly();
        if (m == "qp")
            return kostka_qp(lambda, rects);
        if (m == "rc")
            return kostka_rc(lambda, rects);
        return kostka_charge(lambda, rects);
    };
    if (method == "all") {
        for (const char* m : {"qp", "rc", "charge"})
            polys.emplace_back(m, compute(m));
    } else {
        polys.emplace_back(method, compute(method));
    }
    json o = json::object();
    for (const auto& [m, p] : polys) {
        if (as_json)
            o[m] = at ? json(p.eval(*at)) : to_json(p);
        else if (at)
            std::cout << p.eval(*at) << "\n";
        else
            std::cout << p.str() << "\n";
    }
    bool agree = true;
    for (const auto& [m, p] : polys)
        agree = agree && p == polys.front().second;
    if (as_json) {
        o["agree"] = agree;
        std::cout << o.dump(2) << "\n";
    }
    if (!agree) {
        std::cerr << "error: the computations disagree\n";
        return kViolation;
    }
    return kOk;
}

int cmd_verify(const std::string& theorem, const Bounds& b, unsigned threads, bool as_json)
{
    if (b.max_size < 1 || b.max_rects < 1 || b.max_dim < 1)
        throw usage_error("bounds must be at least 1");
    Report rep = verify(theorem, b, threads);
    if (as_json)
        std::cout << to_json(rep).dump(2) << "\n";
    else
        std::cout << format_report(rep);
    return rep.passed() ? kOk : kViolation;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Littlewood-Richardson tableaux, rigged configurations and generalized Kostka polynomials.\n"
                 "Partitions are written 5,4,3,2,2,1; rectangle sequences WxH lists such as 3x2,2x4,1x3\n"
                 "(W columns, H rows)."};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "JSON output");

    std::string lam_s, rects_s;

    auto* en = app.add_subcommand("enumerate", "List CLR tableaux, rigged configurations or configurations");
    std::string kind;
    bool count = false;
    en->add_option("kind", kind, "clr, rc or configs")->required()->check(CLI::IsMember({"clr", "rc", "configs"}));
    en->add_option("--lambda", lam_s, "partition, e.g. 5,4,3,2,2,1")->required();
    en->add_option("--rects", rects_s, "rectangles, e.g. 3x2,2x4,1x3")->required();
    en->add_flag("--count", count, "print the number of elements only");
    en->add_flag("--json", as_json, "JSON output");

    auto* bi = app.add_subcommand("bijection", "Apply the bijection or its inverse to a JSON file ('-' for stdin)");
    std::string dir, path;
    bool trace = false, coquantum = false;
    bi->add_option("direction", dir, "forward (tableau to rc) or backward")
        ->required()
        ->check(CLI::IsMember({"forward", "backward"}));
    bi->add_option("input", path, "forward: {\"rects\":..,\"shape\":..,\"rows\":..}; backward: rc JSON")->required();
    bi->add_flag("--trace", trace, "print the intermediate rigged configurations");
    bi->add_flag("--coquantum", coquantum, "use the charge-graded variant (conjugated by theta)");
    bi->add_flag("--json", as_json, "JSON output");

    auto* ko = app.add_subcommand("kostka", "Generalized Kostka polynomial K_{lambda R}(q)");
    std::string method = "rc";
    std::optional<long> at;
    ko->add_option("--lambda", lam_s, "partition")->required();
    ko->add_option("--rects", rects_s, "rectangles")->required();
    ko->add_option("--method", method, "qp, rc, charge or all")
        ->check(CLI::IsMember({"qp", "rc", "charge", "all"}));
    ko->add_option("--eval", at, "evaluate at an integer q");
    ko->add_flag("--json", as_json, "JSON output");

    auto* ve = app.add_subcommand("verify", "Exhaustive theorem sweep");
    std::string theorem = "all";
    Bounds b;
    unsigned threads = 0;
    std::vector<std::string> names = theorem_names();
    names.push_back("all");
    ve->add_option("--theorem", theorem, "suite to run")->check(CLI::IsMember(names));
    ve->add_option("--max-size", b.max_size, "largest |R|")->capture_default_str();
    ve->add_option("--max-rects", b.max_rects, "longest R")->capture_default_str();
    ve->add_option("--max-dim", b.max_dim, "largest width and height")->capture_default_str();
    ve->add_option("--threads", threads, "worker threads (0 = hardware)");
    ve->add_flag("--json", as_json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*en)
            return cmd_enumerate(kind, lam_s, rects_s, count, as_json);
        if (*bi)
            return cmd_bijection(dir, path, trace, coquantum, as_json);
        if (*ko)
            return cmd_kostka(lam_s, rects_s, method, at, as_json);
        return cmd_verify(theorem, b, threads, as_json);
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const math_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kMath;
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kViolation;
    }
}
