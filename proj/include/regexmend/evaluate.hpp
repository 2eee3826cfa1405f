#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "regexmend/engine.hpp"

namespace regexmend {

// Positive strings P and negative strings N. Duplicates within a side are
// dropped on ingestion; P and N must be disjoint and jointly non-empty.
class ExampleSet {
public:
    ExampleSet(std::vector<std::string> positive, std::vector<std::string> negative,
               const Alphabet& alphabet) {
        std::set<std::string> pos, neg;
        for (auto& w : positive) {
            alphabet.require_all(w, "positive example");
            if (pos.insert(w).second) positive_.push_back(std::move(w));
        }
        for (auto& w : negative) {
            alphabet.require_all(w, "negative example");
            if (neg.insert(w).second) negative_.push_back(std::move(w));
        }
        for (const auto& w : positive_)
            if (neg.count(w)) throw Error("example sets overlap on \"" + w + "\"");
        if (positive_.empty() && negative_.empty()) throw Error("example set must hold at least one string");
    }

    const std::vector<std::string>& positive() const { return positive_; }
    const std::vector<std::string>& negative() const { return negative_; }
    std::size_t size() const { return positive_.size() + negative_.size(); }

private:
    std::vector<std::string> positive_;
    std::vector<std::string> negative_;
};

// The f measure: (tp + tn - fp - fn) / (|P| + |N|), kept as an exact
// rational so argmax comparisons are deterministic.
struct Fitness {
    std::int64_t num = 0;
    std::int64_t den = 1;
    std::uint32_t tp = 0, tn = 0, fp = 0, fn = 0;

    bool is_one() const { return num == den; }

    friend bool operator==(const Fitness& a, const Fitness& b) { return a.num * b.den == b.num * a.den; }
    friend bool operator<(const Fitness& a, const Fitness& b) { return a.num * b.den < b.num * a.den; }
    friend bool operator>(const Fitness& a, const Fitness& b) { return b < a; }

    double approx() const { return static_cast<double>(num) / static_cast<double>(den); }
};

inline Fitness fitness(const Engine& engine, const RegexPtr& r, const ExampleSet& ex) {
    Fitness f;
    for (const auto& w : ex.positive()) engine.matches(r, w) ? ++f.tp : ++f.fn;
    for (const auto& w : ex.negative()) engine.matches(r, w) ? ++f.fp : ++f.tn;
    f.num = std::int64_t(f.tp) + f.tn - f.fp - f.fn;
    f.den = static_cast<std::int64_t>(ex.size());
    return f;
}

// True iff r accepts every positive and rejects every negative (f = 1).
inline bool consistent(const Engine& engine, const RegexPtr& r, const ExampleSet& ex) {
    for (const auto& w : ex.positive())
        if (!engine.matches(r, w)) return false;
    for (const auto& w : ex.negative())
        if (engine.matches(r, w)) return false;
    return true;
}

}  // namespace regexmend
