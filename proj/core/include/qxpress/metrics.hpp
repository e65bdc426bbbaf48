#pragma once

#include <cstddef>
#include <string>

#include "qxpress/lexer.hpp"
#include "qxpress/profile.hpp"

namespace qxpress {

struct MetricsReport {
    std::string unit_name;
    std::string language_id;
    std::string algorithm_id;

    std::size_t loc = 0;
    std::size_t cc = 1;
    HalsteadCounts counts;

    std::size_t vocabulary = 0;
    std::size_t length = 0;
    double volume = 0.0;
    double difficulty = 0.0;
    double effort = 0.0;

    /// Vocabulary below two or no operands: volume/difficulty fell back to 0.
    bool degenerate = false;

    bool operator==(const MetricsReport&) const = default;
};

/// Whole-unit McCabe count: one plus every construct occurrence. Python
/// comprehensions count once each; their own `for`/filter `if` do not.
std::size_t cyclomatic_complexity(const TokenStream& stream, const LanguageProfile& profile);

std::size_t halstead_vocabulary(const HalsteadCounts& c);
std::size_t halstead_length(const HalsteadCounts& c);
/// N * log2(n); zero when n < 2.
double halstead_volume(const HalsteadCounts& c);
/// (n1 / 2) * (N2 / n2); zero when n2 == 0.
double halstead_difficulty(const HalsteadCounts& c);
double halstead_effort(double volume, double difficulty);

/// Assembles a report from counts alone (CC and LOC supplied by the caller).
MetricsReport make_report(std::string unit_name, std::string language_id,
                          std::string algorithm_id, std::size_t loc, std::size_t cc,
                          const HalsteadCounts& counts);

/// strip -> LOC -> tokenize -> counts -> CC and Halstead. Lexical and encoding
/// errors are rethrown with the unit name prepended.
MetricsReport analyze_unit(const SourceUnit& unit, const LanguageProfile& profile,
                           std::string algorithm_id = {});

}  // namespace qxpress
