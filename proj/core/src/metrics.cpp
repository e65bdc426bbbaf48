#include "qxpress/metrics.hpp"

#include <cmath>
#include <vector>

#include "qxpress/error.hpp"

namespace qxpress {

namespace {

enum class Comprehension { none, list, set, dict };

struct Frame {
    std::string opener;
    bool saw_clause = false;
    bool saw_top_colon = false;
};

}  // namespace

std::size_t cyclomatic_complexity(const TokenStream& stream, const LanguageProfile& profile) {
    const auto& constructs = profile.cc_constructs;
    const std::string& clause = profile.comprehension_clause;
    const bool comprehensions = !clause.empty();
    const bool count_list = comprehensions && constructs.count("list");
    const bool count_set = comprehensions && constructs.count("set");
    const bool count_dict = comprehensions && constructs.count("dict");

    auto is_marker = [&](const std::string& lexeme) {
        return comprehensions && (lexeme == "list" || lexeme == "set" || lexeme == "dict");
    };
    auto kind_of = [](const Frame& f) {
        if (!f.saw_clause) return Comprehension::none;
        if (f.opener == "[]") return Comprehension::list;
        if (f.opener == "{}") return f.saw_top_colon ? Comprehension::dict : Comprehension::set;
        return Comprehension::none;
    };
    auto counted = [&](Comprehension k) {
        return (k == Comprehension::list && count_list) || (k == Comprehension::set && count_set) ||
               (k == Comprehension::dict && count_dict);
    };

    std::size_t decisions = 0;
    std::vector<Frame> frames;
    for (const auto& t : stream.tokens) {
        if (t.pair_closer) {
            if (!frames.empty()) {
                if (counted(kind_of(frames.back()))) ++decisions;
                frames.pop_back();
            }
            continue;
        }
        Frame* top = frames.empty() ? nullptr : &frames.back();
        const bool in_display = top != nullptr && (top->opener == "[]" || top->opener == "{}");

        if (comprehensions && in_display && t.lexeme == clause &&
            t.kind == TokenKind::keyword) {
            top->saw_clause = true;
            // Counted once, as the comprehension, when its bracket closes.
            if (counted(kind_of(*top))) continue;
        } else if (comprehensions && in_display && top->saw_clause && t.lexeme == "if" &&
                   t.kind == TokenKind::keyword && counted(kind_of(*top))) {
            continue;  // comprehension filter
        } else if (in_display && !top->saw_clause && t.lexeme == ":" && top->opener == "{}") {
            top->saw_top_colon = true;
        }

        if (t.pair_opener) frames.push_back({t.lexeme});
        if (constructs.count(t.lexeme) && !is_marker(t.lexeme)) ++decisions;
    }
    for (const auto& f : frames) {
        if (counted(kind_of(f))) ++decisions;
    }
    return 1 + decisions;
}

std::size_t halstead_vocabulary(const HalsteadCounts& c) {
    return c.distinct_operators + c.distinct_operands;
}

std::size_t halstead_length(const HalsteadCounts& c) {
    return c.total_operators + c.total_operands;
}

double halstead_volume(const HalsteadCounts& c) {
    const auto n = halstead_vocabulary(c);
    if (n < 2) return 0.0;
    return static_cast<double>(halstead_length(c)) * std::log2(static_cast<double>(n));
}

double halstead_difficulty(const HalsteadCounts& c) {
    if (c.distinct_operands == 0) return 0.0;
    return (static_cast<double>(c.distinct_operators) / 2.0) *
           (static_cast<double>(c.total_operands) / static_cast<double>(c.distinct_operands));
}

double halstead_effort(double volume, double difficulty) { return difficulty * volume; }

MetricsReport make_report(std::string unit_name, std::string language_id,
                          std::string algorithm_id, std::size_t loc, std::size_t cc,
                          const HalsteadCounts& counts) {
    MetricsReport r;
    r.unit_name = std::move(unit_name);
    r.language_id = std::move(language_id);
    r.algorithm_id = std::move(algorithm_id);
    r.loc = loc;
    r.cc = cc;
    r.counts = counts;
    r.vocabulary = halstead_vocabulary(counts);
    r.length = halstead_length(counts);
    r.volume = halstead_volume(counts);
    r.difficulty = halstead_difficulty(counts);
    r.effort = halstead_effort(r.volume, r.difficulty);
    r.degenerate = r.vocabulary < 2 || counts.distinct_operands == 0;
    return r;
}

MetricsReport analyze_unit(const SourceUnit& unit, const LanguageProfile& profile,
                           std::string algorithm_id) {
    try {
        const auto effective = strip_non_essential(unit, profile);
        const auto stream = tokenize(effective, profile);
        return make_report(unit.unit_name, unit.language_id.empty() ? profile.id : unit.language_id,
                           std::move(algorithm_id), count_loc(effective),
                           cyclomatic_complexity(stream, profile), classify_counts(stream));
    } catch (const Error& e) {
        throw Error(e.code(), "unit '" + unit.unit_name + "': " + e.what());
    }
}

}  // namespace qxpress
