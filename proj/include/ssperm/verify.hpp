#pragma once

// Exhaustive theorem harness.  Each verify_* call enumerates the relevant
// object class up to n_max, checks every claimed identity pointwise, and
// returns a structured report; failures carry serialized counterexamples
// reproducible through the CLI.

#include <string>
#include <vector>

namespace ssperm {

struct VerificationReport {
    std::string id;        // "thm3.1", "thm4.1", "thm4.2", "thm5.1", "formulas", "table2"
    int n_max = 0;
    long long items = 0;   // objects checked (class-exhaustive) or identity rows compared
    std::vector<std::string> failures;
    long long suppressed_failures = 0;  // beyond the storage cap
    double elapsed_seconds = 0.0;

    bool passed() const { return failures.empty() && suppressed_failures == 0; }
    long long failure_count() const {
        return static_cast<long long>(failures.size()) + suppressed_failures;
    }
};

// f is an involution on S_n(231) transporting
// (mnd, mna, asc, des, ldr, rar, lmin, rmin) to
// (mna, mnd, des, asc, rar, ldr, rmin, lmin) pointwise.
VerificationReport verify_thm_3_1(int n_max);

// g maps S_n(231) onto itself with ldr(g(pi)) = rmax(pi), inverse round-trip,
// block-pattern preservation, and equal ldr/rmax distribution rows.
VerificationReport verify_thm_4_1(int n_max);

// h+ is a bijection from full binary trees with 2n edges onto S_n(231) with
// x_stat(T) = mnd(h+(T)); also lpath(T) = rmax(h(T)) and the inverse
// round-trips.  Includes the worked 12-edge instance byte-for-byte.
VerificationReport verify_thm_4_2(int n_max);

// z is a bijection from plane trees with n edges onto S_n(231) with
// marked_count(T) = mnd(z(T)) and the ldr-parity invariant.  Includes the
// worked 10-edge instance byte-for-byte.
VerificationReport verify_thm_5_1(int n_max);

// Every distribution-vs-formula identity: Catalan cardinalities, Narayana,
// the two closed forms, the Eulerian polynomial, the EGF expansion, the
// mnd/mna and ldr/rmax equidistributions, and the tree-statistic histograms.
// S_n-exhaustive rows cap at min(n_max, 9); tree histograms at min(n_max, 8).
VerificationReport verify_formulas(int n_max);

// mna over S_n(321) against the embedded golden table for 1 <= n <= n_max
// (<= 12), the same rows for mnd over S_n(123), and Catalan row sums.
VerificationReport verify_table_2(int n_max);

std::string report_text(const VerificationReport& r);
std::string report_json_string(const VerificationReport& r);

}  // namespace ssperm
