#pragma once

// Textual family grammar, certificate JSON, statistics CSV, and
// characterization directory persistence.
//
// Family grammar (whitespace-insensitive):
//   family ::= '{' set (',' set)* '}' | '{}'
//   set    ::= '{' nat (',' nat)* '}' | '{}'
// Canonical printing emits members in the canonical order with no spaces.

#include <optional>
#include <string>

#include "fc/characterize.hpp"
#include "fc/classify.hpp"
#include "fc/family.hpp"

namespace fc {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parses the family grammar.  The universe size is the given one, or the
/// smallest that fits (max element + 1) when absent.
Family parse_family(const std::string& text, std::optional<int> universe_size = {});

std::string print_family(const Family& f);
std::string print_set(const SetWord& a);

/// Certificate JSON: { family, universe, status, weight | witnesses }.
std::string certificate_to_json(const FCStatus& status);
FCStatus certificate_from_json(const std::string& text);

std::string stats_to_csv(const std::vector<StatsRow>& rows);

/// Characterization directory: families.json, lf_ln.json, stats.csv
/// (optional), manifest.json.
void save_characterization(const Characterization& chars, const std::string& dir,
                           const std::vector<StatsRow>* stats_rows = nullptr,
                           double wall_clock_seconds = 0.0);
Characterization load_characterization(const std::string& dir);

}  // namespace fc
