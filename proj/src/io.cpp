#include "lrrc/io.hpp"

#include <sstream>
#include <stdexcept>

namespace lrrc {

Partition parse_partition(const std::string& text)
{
    Partition p;
    std::string s;
    for (char ch : text)
        if (ch != ' ')
            s.push_back(ch);
    if (s.empty())
        return p;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = std::stoi(item, &used);
        if (used != item.size() || v < 0)
            throw std::invalid_argument("bad partition part '" + item + "'");
        if (v > 0)
            p.push_back(v);
    }
    if (!is_partition(p))
        throw std::invalid_argument("parts must be weakly decreasing: " + text);
    return p;
}

std::string format_partition(const Partition& p)
{
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(p[i]);
    }
    return s;
}

std::string format_tableau(const Tableau& t)
{
    std::string s;
    for (const auto& row : t.rows) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j)
                s += ' ';
            s += std::to_string(row[j]);
        }
        s += '\n';
    }
    return s;
}

std::string format_tableaux(const std::vector<Tableau>& ts)
{
    std::string s;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (i)
            s += '\n';
        s += format_tableau(ts[i]);
    }
    return s;
}

std::string format_rc(const RiggedConfig& rc)
{
    std::string s = "lambda " + format_partition(rc.lambda) + "  rects " + format_rects(rc.rects) + "\n";
    if (rc.nu.empty())
        return s + "(empty)\n";
    for (int k = 1; k <= static_cast<int>(rc.nu.size()); ++k) {
        s += "nu(" + std::to_string(k) + ")\n";
        if (rc.nu[k - 1].empty())
            s += "  .\n";
        for (const auto& str : rc.nu[k - 1])
            s += "  " + std::to_string(vacancy(rc, k, str.length)) + " |" + std::to_string(str.length) +
                 "| " + std::to_string(str.label) + "\n";
    }
    return s;
}

std::string format_trace(const BijectionTrace& trace)
{
    std::string s;
    for (const auto& st : trace) {
        s += "x = " + std::to_string(st.letter) + "  column " + std::to_string(st.column) +
             "  zc column " + std::to_string(st.zc_column);
        if (!st.selected.empty()) {
            s += "  selected";
            for (auto [k, len] : st.selected)
                s += " s(" + std::to_string(k) + ")=" + std::to_string(len);
        }
        s += "\n" + format_rc(st.rc) + "\n";
    }
    return s;
}

json to_json(const Tableau& t) { return {{"shape", t.shape()}, {"rows", t.rows}}; }

json to_json(const RectSeq& r)
{
    json j = json::array();
    for (const auto& x : r)
        j.push_back({x.width, x.height});
    return j;
}

json to_json(const RiggedConfig& rc)
{
    json nu = json::array();
    for (const auto& rp : rc.nu) {
        json a = json::array();
        for (const auto& s : rp)
            a.push_back({s.length, s.label});
        nu.push_back(a);
    }
    return {{"lambda", rc.lambda}, {"rects", to_json(rc.rects)}, {"nu", nu}};
}

json to_json(const QPoly& p) { return p.coefficients(); }

json to_json(const TraceStep& s)
{
    json sel = json::array();
    for (auto [k, len] : s.selected)
        sel.push_back({k, len});
    return {{"x", s.letter}, {"column", s.column}, {"zc_column", s.zc_column}, {"selected", sel},
            {"rc", to_json(s.rc)}};
}

Tableau tableau_from_json(const json& j)
{
    Tableau t;
    t.rows = j.at("rows").get<std::vector<std::vector<int>>>();
    if (j.contains("shape") && j.at("shape").get<Partition>() != t.shape())
        throw std::invalid_argument("tableau shape does not match its rows");
    if (!is_partition(t.shape()))
        throw std::invalid_argument("tableau rows do not form a partition shape");
    return t;
}

RectSeq rects_from_json(const json& j)
{
    RectSeq r;
    for (const auto& x : j) {
        auto v = x.get<std::vector<int>>();
        if (v.size() != 2 || v[0] < 1 || v[1] < 1)
            throw std::invalid_argument("rectangles are [width, height] pairs of positive integers");
        r.push_back({v[0], v[1]});
    }
    return r;
}

RiggedConfig rc_from_json(const json& j)
{
    RiggedConfig rc;
    rc.lambda = j.at("lambda").get<Partition>();
    if (!is_partition(rc.lambda))
        throw std::invalid_argument("lambda is not a partition");
    rc.rects = rects_from_json(j.at("rects"));
    for (const auto& rp : j.at("nu")) {
        RiggedPartition p;
        for (const auto& s : rp) {
            auto v = s.get<std::vector<int>>();
            if (v.size() != 2 || v[0] < 1)
                throw std::invalid_argument("strings are [length, label] pairs with length >= 1");
            p.push_back({v[0], v[1]});
        }
        rc.nu.push_back(p);
    }
    rc.canonicalize();
    return rc;
}

} // namespace lrrc
