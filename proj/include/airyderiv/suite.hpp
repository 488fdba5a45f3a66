#pragma once

// Verification suite: every module's checks as flat records, grouped by
// acceptance area, run either in parallel (OpenMP) or serially.

#include "airyderiv/airy_pq.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace airyderiv {

struct CheckRecord {
    std::string check;
    std::string family;
    long n = -1;  // -1 when the check has no index
    bool status = false;
    std::string lhs;
    std::string rhs;
    std::optional<double> rel_err;  // floating checks only
    std::string detail;
    friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

/// A corrupted published-table row, for exercising the failure path.
struct InjectedFault {
    Family family = Family::P;
    unsigned n = 0;
};

struct SuiteConfig {
    unsigned n_max = 40;
    std::uint64_t seed = 20240611;
    /// Keys: 2f1, 3f2, const, maclaurin, richardson, wronskian, genfun.
    std::map<std::string, double> tol;
    std::optional<InjectedFault> fault;

    double tolerance(const std::string& key) const;
};

inline constexpr unsigned kMaxNMax = 200;

/// Tolerance keys and their default values.
const std::map<std::string, double>& default_tolerances();

enum class Group { table1, table2, equivalences, recurrences, expansions, gauss_2f1, values_3f2, certificate, numeric, zeros };

inline constexpr Group kAllGroups[] = {Group::table1,     Group::table2,    Group::equivalences, Group::recurrences,
                                       Group::expansions, Group::gauss_2f1, Group::values_3f2,   Group::certificate,
                                       Group::numeric,    Group::zeros};

std::string_view name(Group g);

struct GroupResult {
    Group group;
    std::vector<CheckRecord> records;
    double elapsed = 0.0;  // seconds
    bool pass() const;
};

struct SuiteResult {
    std::vector<GroupResult> groups;
    bool pass() const;
    std::size_t size() const;
};

/// Throws std::invalid_argument for n_max above kMaxNMax or a nonpositive
/// tolerance.
void validate(const SuiteConfig& cfg);

/// Task failures (exceptions) become failed records.  Record order depends
/// only on the configuration.
GroupResult run_group(Group g, const SuiteConfig& cfg, bool parallel = true);
SuiteResult run_suite(const SuiteConfig& cfg, bool parallel = true);

// ---------------------------------------------------------------------------

struct ZeroRow {
    Family family = Family::P;
    unsigned n = 0;
    int degree = -1;  // of the reduced polynomial; -1 for the zero polynomial
    unsigned real_roots = 0;
    unsigned negative_roots = 0;
    bool simple = true;
    bool skipped() const { return degree < 1; }
    bool pass() const { return skipped() || (real_roots == unsigned(degree) && negative_roots == real_roots && simple); }
};

/// Sturm analysis of the reduced P/Q/Z members up to n_pqz and R/S/T up to
/// n_rst.  Rows ordered by family, then n.
std::vector<ZeroRow> zeros_table(unsigned n_pqz, unsigned n_rst, bool parallel = true);

}  // namespace airyderiv
