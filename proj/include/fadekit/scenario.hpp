#ifndef FADEKIT_SCENARIO_HPP
#define FADEKIT_SCENARIO_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fadekit/fading.hpp"
#include "fadekit/metrics.hpp"

namespace fadekit {

enum class Metric { aber, acc, pdf, cdf };
enum class Method { closed, quadrature_exact, quadrature_approx, mc };
enum class SnrConvention { per_branch, total };

/// Channel described either by raw family parameters or a named special case.
struct DirectFading {
    double kappa;
    double mu;
    double m;
};
using ChannelDesc = std::variant<DirectFading, KappaMu, EtaMu, RicianShadowed, Hoyt,
                                 Rician, NakagamiM, Rayleigh, OneSidedGaussian>;

struct SweepSpec {
    double start_db = 0.0;
    double stop_db = 30.0;
    double step_db = 1.0;
};

struct McSpec {
    std::uint64_t samples = 1000000;
    std::uint64_t seed = 1;
};

struct Scenario {
    Metric metric = Metric::aber;
    std::optional<ModulationSpec> modulation; // required for aber
    double noise_a = 2.0;
    std::optional<ExpSumApprox> custom_approx; // overrides the tabulated preset
    ChannelDesc channel = Rayleigh{};
    int branches = 1;
    SweepSpec sweep;
    SnrConvention convention = SnrConvention::per_branch;
    Method method = Method::closed;
    McSpec mc;
    // Fixed channel mean for pdf/cdf tables, where the sweep axis is the
    // evaluation point instead of the mean SNR.
    std::optional<double> mean_snr_db;

    void validate() const; // throws usage_error naming the offending field
};

struct CsvRow {
    double snr_db;
    SnrConvention convention;
    Metric metric;
    double value;
    Method method;
    std::optional<double> std_error;
    std::string flags; // ';'-separated warnings, empty when clean
};

struct CsvTable {
    std::vector<CsvRow> rows;
    /// Header "snr_db,snr_convention,metric,value,method,std_error,flags";
    /// numbers with 17 significant digits; every row newline-terminated.
    std::string to_csv() const;
};

std::string to_string(Metric m);
std::string to_string(Method m);
std::string to_string(SnrConvention c);

/// Runs every sweep point; per-row computation errors land in the flags column
/// without aborting the sweep. Rows ascend in snr_db; output is deterministic
/// for a given scenario and seed.
CsvTable run_scenario(const Scenario& sc);

Scenario parse_scenario_file(const std::filesystem::path& path);
Scenario parse_scenario_text(const std::string& text,
                             const std::string& source_name = "<string>");

/// Canonical key-value form; parse(serialize(sc)) reproduces sc exactly.
std::string serialize_scenario(const Scenario& sc);

/// MrcChannel for one sweep point under the given axis convention.
MrcChannel make_channel(const ChannelDesc& desc, double mean_snr_per_branch,
                        int branches);

} // namespace fadekit

#endif
