#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <string>
#include <tuple>

#include "lrrc/bijection.hpp"
#include "lrrc/io.hpp"
#include "lrrc/kostka.hpp"
#include "lrrc/lr.hpp"
#include "lrrc/verify.hpp"

using namespace lrrc;

namespace {

const RectSeq kR{{3, 2}, {2, 4}, {1, 3}};
const Partition kLambda{5, 4, 3, 2, 2, 1};

const char* const kExample =
    "1 3 5 7 11\n2 4 6 12\n8 13 15\n9 14\n10 16\n17\n"
    "\n"
    "1 3 5 7 11\n2 4 6 15\n8 12 16\n9 13\n10 14\n17\n"
    "\n"
    "1 3 5 11 15\n2 4 6 12\n7 13 16\n8 14\n9 17\n10\n"
    "\n"
    "1 3 5 11 15\n2 4 6 16\n7 12 17\n8 13\n9 14\n10\n";

const Bounds kCorpus{8, 3, 3};

std::string detail;

bool report_ok(const Report& rep)
{
    detail += " " + rep.theorem + ":" + std::to_string(rep.cases);
    for (const auto& f : rep.failures)
        std::fprintf(stderr, "  %s %s %s\n", f.check.c_str(), f.detail.c_str(), f.input.dump().c_str());
    return rep.passed();
}

bool criterion1()
{
    return format_tableaux(enumerate_clr(kLambda, kR)) == kExample;
}

bool criterion2()
{
    using Row = std::vector<std::vector<std::tuple<int, int, int>>>;
    std::map<int, Row> golden{
        {11, {{}, {{0, 1, 0}}, {{0, 1, 0}}}},
        {12, {{}, {{0, 2, 0}}, {{0, 2, 0}}}},
        {14, {{}, {{0, 2, 0}}, {{0, 2, 0}}}},
        {15, {{{1, 1, 1}}, {{0, 2, 0}, {0, 1, 0}}, {{0, 2, 0}, {0, 1, 0}}, {{0, 1, 0}}}},
        {16, {{{1, 2, 1}}, {{0, 3, 0}, {0, 1, 0}}, {{0, 2, 0}, {0, 1, 0}}, {{0, 1, 0}}}},
        {17, {{{1, 3, 1}}, {{1, 3, 0}, {0, 1, 0}}, {{0, 2, 0}, {0, 1, 0}}, {{0, 1, 0}}}},
    };
    Tableau t{{{1, 3, 5, 11, 15}, {2, 4, 6, 12}, {7, 13, 16}, {8, 14}, {9, 17}, {10}}};
    BijectionTrace tr;
    RiggedConfig rc = phi_bar(t, kR, &tr);
    RiggedConfig final_rc{kLambda, kR, {{{3, 1}}, {{3, 0}, {1, 0}}, {{2, 0}, {1, 0}}, {{1, 0}}}};
    final_rc.canonicalize();
    bool ok = rc == final_rc && tr.size() == 17;
    for (const auto& [x, row] : golden) {
        if (!ok)
            break;
        const auto& step = tr[x - 1];
        Row got;
        for (std::size_t k = 0; k < step.rc.nu.size(); ++k) {
            got.emplace_back();
            for (const auto& s : step.rc.nu[k])
                got.back().emplace_back(vacancy(step.rc, static_cast<int>(k) + 1, s.length), s.length, s.label);
        }
        ok = step.letter == x && got == row;
    }
    return ok;
}

bool criterion3()
{
    long count = 0;
    for (const auto& r : rect_corpus(kCorpus))
        for (const auto& lam : partitions_of(total(r))) {
            ++count;
            QPoly a = kostka_qp(lam, r);
            if (a != kostka_rc(lam, r) || a != kostka_charge(lam, r))
                return false;
        }
    detail += " pairs:" + std::to_string(count);
    return true;
}

bool criterion4()
{
    RectSeq unit(3, Rect{1, 1});
    if (kostka_rc({2, 1}, unit) != QPoly({0, 1, 1}) || kostka_foulkes({2, 1}, {1, 1, 1}) != QPoly({0, 1, 1}))
        return false;
    return report_ok(verify("classical", {7, 7, 7}));
}

bool criterion5() { return report_ok(verify("bijectivity", kCorpus)); }

bool criterion6()
{
    bool ok = true;
    for (const char* name : {"evacuation", "transpose", "embedding", "statistics", "commutation", "vacancy"})
        ok = report_ok(verify(name, kCorpus)) && ok;
    return ok;
}

bool criterion7() { return report_ok(verify("involution", kCorpus)); }

} // namespace

int main()
{
    const std::vector<std::function<bool()>> criteria{criterion1, criterion2, criterion3, criterion4,
                                                      criterion5, criterion6, criterion7};
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        detail.clear();
        auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = criteria[i]();
        } catch (const std::exception& e) {
            detail += std::string(" exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s criterion %zu (%.2fs)%s\n", ok ? "PASS" : "FAIL", i + 1, secs, detail.c_str());
        std::fflush(stdout);
        failed += ok ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
