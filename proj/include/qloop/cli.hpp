#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "qloop/rational.hpp"
#include "qloop/report.hpp"
#include "qloop/spectral.hpp"

namespace qloop::cli {

enum class Format { Text, Json };

/// Parsed command-line configuration; maps onto a validated SpectralConfig.
struct RunConfig {
    std::vector<std::pair<Rational, int>> roots;
    Rational q = Rational(2);
    Rational alphaSeed = Rational(0);
    int truncation = -1; // -1 = max(2n+2, 2*window)
    int window = 2;
    int maxDegree = 10;
    Format format = Format::Text;
};

/// Parses "a:mult,a:mult,..." with rational literals; rejects duplicates,
/// zero roots and malformed entries.
std::vector<std::pair<Rational, int>> parse_roots(const std::string& spec);

/// Validated spectral configuration for the run (throws ConfigError).
SpectralConfig make_spectral(const RunConfig& rc);

/// Exit codes: 0 all checks pass, 1 verification failure, 2 config error.
int cmd_relations(const RunConfig& rc, std::ostream& out);
int cmd_qchar(const RunConfig& rc, std::ostream& out);
int cmd_qtchar(const RunConfig& rc, std::ostream& out);
int cmd_jordan(const RunConfig& rc, std::ostream& out);
int cmd_verify(const RunConfig& rc, std::ostream& out);

/// Report rendering shared by the commands.
void render_report(const Report& rep, Format format, const std::string& schema, std::ostream& out);

} // namespace qloop::cli
