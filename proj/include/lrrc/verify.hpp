#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "lrrc/rect_seq.hpp"

namespace lrrc {

struct Bounds {
    int max_size = 7;
    int max_rects = 3;
    int max_dim = 3;
};

struct Failure {
    std::string check;
    std::string detail;
    nlohmann::json input;
};

struct Report {
    std::string theorem;
    Bounds bounds;
    long cases = 0;
    std::map<std::string, long> checks;
    long failure_count = 0;
    std::vector<Failure> failures; // first few, in sweep order
    double seconds = 0;

    bool passed() const { return failure_count == 0; }
};

// Suites accepted by verify(); "all" runs each of them.
const std::vector<std::string>& theorem_names();

// Every rectangle sequence (including the empty one) within the bounds,
// ordered by size, then length, then lexicographically.
std::vector<RectSeq> rect_corpus(const Bounds& b);

// Sequences reachable from r by E1, E1split and E2 moves, sorted; includes r.
std::vector<RectSeq> dominated_sequences(const RectSeq& r);

// threads = 0 uses the hardware concurrency.
Report verify(const std::string& theorem, const Bounds& b, unsigned threads = 0);

nlohmann::json to_json(const Report& r);
std::string format_report(const Report& r);

} // namespace lrrc
