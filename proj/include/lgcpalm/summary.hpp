#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lgcp {

enum class SummaryKind { F, G, J, K };
enum class SummaryMethod { Laplace, MonteCarlo, Empirical, Theoretical };

std::string to_string(SummaryKind kind);
std::string to_string(SummaryMethod method);

/// Sampled functional summary r -> value. Radii are strictly increasing;
/// entries that could not be computed are flagged instead of aborting the
/// whole curve, with the reason kept alongside.
struct SummaryCurve {
    SummaryKind kind = SummaryKind::F;
    SummaryMethod method = SummaryMethod::Laplace;
    int q = 0;              ///< grid refinement, 0 when not applicable
    std::string provenance; ///< model/config description (JSON text)

    std::vector<double> radii;
    std::vector<double> values;
    std::vector<std::uint8_t> ok;   ///< per-radius validity
    std::vector<std::string> notes; ///< failure reason per radius ("" when ok)

    std::size_t size() const { return radii.size(); }
    void push(double r, double value);
    void push_missing(double r, std::string note);

    /// CSV with columns (r, value, method, q); 17 significant digits,
    /// byte-stable for identical inputs. Missing entries print value "nan".
    std::string to_csv() const;

    /// JSON document embedding the provenance (model config) verbatim.
    std::string to_json() const;
};

/// Evenly spaced radii grid, `count` values from min to max inclusive.
std::vector<double> radii_grid(double min, double max, int count);

} // namespace lgcp
