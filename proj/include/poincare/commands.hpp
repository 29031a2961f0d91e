#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "poincare/desitter.hpp"
#include "poincare/polarization.hpp"
#include "poincare/sl2c.hpp"
#include "poincare/wigner.hpp"

namespace poincare::cli {

using Json = nlohmann::ordered_json;

// Bad arguments or malformed option strings.  Mapped to exit code 1, as
// opposed to poincare::Error (exit code 2).
class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

// default gate applied to every self-consistency residual a command reports
inline constexpr double kDefaultTolerance = 1e-9;

// "kind:param,kind:param,..." applied left to right (the first listed
// element acts on the state first).  Kinds: phase|phaseshift, rot|rotation,
// boost|atten|attenuation.  With degrees=true, phase and rotation
// parameters are given in degrees; boost rapidity never converts.
std::vector<GeneratorStep> parse_pipeline(const std::string& text, bool degrees);

// "t,z,x,y"
FourVector parse_four_vector(const std::string& text);

// 17 significant digits, round-trip exact
std::string format_double(double v);

// Structured result of one command.  `doc` is the full record; `table`
// holds the row-oriented view for the commands whose CSV form is a table.
struct OutputRecord {
    Json doc;
    std::vector<std::string> table_header;
    std::vector<std::vector<std::string>> table_rows;
    bool residuals_ok = true;

    std::string to_json() const;  // compact, one line
    std::string to_text() const;  // indented
    std::string to_csv() const;   // table when present, field,value otherwise
};

struct TransformOptions {
    std::string pipeline;
    std::string vector;
    bool degrees = false;
    double tolerance = kDefaultTolerance;
};

struct LittleGroupOptions {
    std::string vector;
    std::optional<std::string> probe;  // "rot:1.0", "phase:2.5", "gauge:3"
    bool degrees = false;
    double tolerance = kDefaultTolerance;
};

struct StokesOptions {
    std::optional<double> amplitude;  // with phi/sigma: closed-form mode
    double phi = 0.0;
    std::optional<double> sigma;
    std::optional<std::string> samples_path;  // alternative: estimate from file
    bool degrees = false;
    double tolerance = kDefaultTolerance;
};

enum class SweepVariable { Chi, Sigma };

struct BridgeOptions {
    double mass = 0.0;
    double momentum = 0.0;
    SweepVariable sweep = SweepVariable::Chi;
    int n = 33;
    std::optional<double> min;
    std::optional<double> max;
    bool degrees = false;
    double tolerance = kDefaultTolerance;
};

struct HyperbolaOptions {
    std::string masses;   // comma-separated
    std::string p_range;  // "lo,hi"
    int n = 31;
    double tolerance = kDefaultTolerance;
};

OutputRecord cmd_transform(const TransformOptions& opt);
OutputRecord cmd_little_group(const LittleGroupOptions& opt);
OutputRecord cmd_stokes(const StokesOptions& opt);
OutputRecord cmd_bridge(const BridgeOptions& opt);
OutputRecord cmd_hyperbola(const HyperbolaOptions& opt);

}  // namespace poincare::cli
