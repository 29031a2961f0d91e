#include "poincare/commands.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

namespace poincare::cli {

namespace {

constexpr double kPi = std::numbers::pi;

double to_radians(double v, bool degrees) { return degrees ? v * kPi / 180.0 : v; }

double parse_double_or(const std::string& text, const std::string& what) {
    double value = 0.0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end)
        throw UsageError("bad number '" + text + "' in " + what);
    return value;
}

std::vector<double> parse_doubles(const std::string& text, const std::string& what) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        const std::string field =
            text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (field.empty()) throw UsageError("empty field in " + what + " '" + text + "'");
        out.push_back(parse_double_or(field, what));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t hash = 1469598103934665603ULL;
    for (const char c : data) {
        hash ^= static_cast<unsigned char>(c);
        hash *= 1099511628211ULL;
    }
    return hash;
}

std::string digest(const Json& input) {
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(input.dump())));
    return buf;
}

Json json_complex(Complex v) { return Json{{"re", v.real()}, {"im", v.imag()}}; }

Json json_mat2(const ComplexMat2& m) {
    return Json{{"e00", json_complex(m.e00)},
                {"e01", json_complex(m.e01)},
                {"e10", json_complex(m.e10)},
                {"e11", json_complex(m.e11)}};
}

Json json_four_vector(const FourVector& v) {
    return Json{{"t", v.t}, {"z", v.z}, {"x", v.x}, {"y", v.y}};
}

Json json_mat4(const Mat4R& m) {
    Json rows = Json::array();
    for (int r = 0; r < 4; ++r) {
        Json row = Json::array();
        for (int c = 0; c < 4; ++c) row.push_back(m.at(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

const char* kind_name(GeneratorKind kind) {
    switch (kind) {
        case GeneratorKind::PhaseZ: return "phase";
        case GeneratorKind::RotY: return "rot";
        case GeneratorKind::BoostZ: return "boost";
    }
    return "?";
}

Json json_provenance(const GroupElement& g) {
    if (!g.provenance()) return nullptr;
    Json steps = Json::array();
    for (const auto& step : *g.provenance())
        steps.push_back(Json{{"kind", kind_name(step.kind)}, {"param", step.param}});
    return steps;
}

double max_component_diff(const FourVector& a, const FourVector& b) {
    return std::max(std::max(std::abs(a.t - b.t), std::abs(a.z - b.z)),
                    std::max(std::abs(a.x - b.x), std::abs(a.y - b.y)));
}

double max_component_abs(const FourVector& v) {
    return std::max(std::max(std::abs(v.t), std::abs(v.z)),
                    std::max(std::abs(v.x), std::abs(v.y)));
}

// marks the record pass/fail against the gate and stamps status
void finish(OutputRecord& rec, double tolerance) {
    rec.doc["tolerance"] = tolerance;
    bool ok = true;
    if (rec.doc.contains("residuals"))
        for (const auto& [key, value] : rec.doc["residuals"].items())
            if (value.is_number() && value.get<double>() > tolerance) ok = false;
    rec.residuals_ok = ok;
    rec.doc["status"] = ok ? "ok" : "residual_exceeded";
}

std::string csv_cell(const Json& v) {
    if (v.is_null()) return "";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    return format_double(v.get<double>());
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<GeneratorStep> parse_pipeline(const std::string& text, bool degrees) {
    if (text.empty()) throw UsageError("pipeline is empty");
    std::vector<GeneratorStep> steps;
    std::size_t pos = 0;
    std::size_t index = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::size_t end = comma == std::string::npos ? text.size() : comma;
        const std::string token = text.substr(pos, end - pos);
        ++index;
        const auto fail = [&](const std::string& why) {
            throw UsageError("pipeline token " + std::to_string(index) + " at char " +
                             std::to_string(pos) + ": " + why);
        };
        const std::size_t colon = token.find(':');
        if (token.empty() || colon == std::string::npos || colon == 0 ||
            colon + 1 == token.size())
            fail("expected kind:param, got '" + token + "'");
        const std::string kind = token.substr(0, colon);
        const std::string param_text = token.substr(colon + 1);
        double param = 0.0;
        {
            const char* b = param_text.data();
            auto [ptr, ec] = std::from_chars(b, b + param_text.size(), param);
            if (ec != std::errc{} || ptr != b + param_text.size())
                fail("bad parameter '" + param_text + "'");
        }
        if (kind == "phase" || kind == "phaseshift")
            steps.push_back({GeneratorKind::PhaseZ, to_radians(param, degrees)});
        else if (kind == "rot" || kind == "rotation")
            steps.push_back({GeneratorKind::RotY, to_radians(param, degrees)});
        else if (kind == "boost" || kind == "atten" || kind == "attenuation")
            steps.push_back({GeneratorKind::BoostZ, param});
        else
            fail("unknown kind '" + kind + "'");
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return steps;
}

FourVector parse_four_vector(const std::string& text) {
    const std::vector<double> c = parse_doubles(text, "four-vector");
    if (c.size() != 4)
        throw UsageError("four-vector needs 4 components t,z,x,y, got " +
                         std::to_string(c.size()));
    return {c[0], c[1], c[2], c[3]};
}

std::string OutputRecord::to_json() const { return doc.dump() + "\n"; }

std::string OutputRecord::to_text() const { return doc.dump(2) + "\n"; }

std::string OutputRecord::to_csv() const {
    std::ostringstream out;
    if (!table_header.empty()) {
        for (std::size_t i = 0; i < table_header.size(); ++i)
            out << (i ? "," : "") << table_header[i];
        out << "\n";
        for (const auto& row : table_rows) {
            for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
            out << "\n";
        }
        return out.str();
    }
    const Json flat = doc.flatten();
    out << "field,value\n";
    for (const auto& [key, value] : flat.items()) {
        std::string name = key.substr(1);
        for (auto& ch : name)
            if (ch == '/') ch = '.';
        out << name << "," << csv_cell(value) << "\n";
    }
    return out.str();
}

OutputRecord cmd_transform(const TransformOptions& opt) {
    const std::vector<GeneratorStep> steps = parse_pipeline(opt.pipeline, opt.degrees);
    const FourVector vin = parse_four_vector(opt.vector);

    // first listed element acts first, so it sits rightmost in the product
    GroupElement g = GroupElement::identity();
    for (const GeneratorStep& step : steps)
        g = compose(make_generator(step.kind, step.param), g);

    const FourVector vout = act_on_four_vector(g, vin);
    const Mat4R lorentz = covering_map(g);
    const double i_in = interval(vin), i_out = interval(vout);

    OutputRecord rec;
    rec.doc["command"] = "transform";
    rec.doc["input"] = Json{{"pipeline", opt.pipeline},
                            {"vector", json_four_vector(vin)},
                            {"degrees", opt.degrees}};
    rec.doc["input_digest"] = digest(rec.doc["input"]);
    rec.doc["result"] = Json{{"vector_out", json_four_vector(vout)},
                             {"matrix", json_mat2(g.mat())},
                             {"provenance", json_provenance(g)},
                             {"lorentz", json_mat4(lorentz)},
                             {"interval_in", i_in},
                             {"interval_out", i_out}};
    rec.doc["residuals"] =
        Json{{"interval_relative", std::abs(i_out - i_in) / std::max(1.0, std::abs(i_in))},
             {"det_drift", std::abs(g.mat().det() - Complex(1.0))}};
    finish(rec, opt.tolerance);
    return rec;
}

namespace {

const char* tag_name(MassTag tag) {
    switch (tag) {
        case MassTag::Massive: return "massive";
        case MassTag::Massless: return "massless";
        case MassTag::Spacelike: return "spacelike";
    }
    return "?";
}

struct ParsedProbe {
    LittleKind kind;
    double param;
    std::string token;
};

ParsedProbe parse_probe(const std::string& text, bool degrees) {
    const std::size_t colon = text.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == text.size())
        throw UsageError("probe must be kind:param, got '" + text + "'");
    const std::string kind = text.substr(0, colon);
    const double param = parse_double_or(text.substr(colon + 1), "probe");
    if (kind == "phase") return {LittleKind::ZPhase, to_radians(param, degrees), text};
    if (kind == "rot") return {LittleKind::YRotation, to_radians(param, degrees), text};
    if (kind == "gauge") return {LittleKind::GaugeTriangular, param, text};
    throw UsageError("unknown probe kind '" + kind + "' (use phase, rot, or gauge)");
}

}  // namespace

OutputRecord cmd_little_group(const LittleGroupOptions& opt) {
    const FourVector v = parse_four_vector(opt.vector);
    const std::optional<ParsedProbe> probe =
        opt.probe ? std::optional<ParsedProbe>(parse_probe(*opt.probe, opt.degrees))
                  : std::nullopt;

    const MassClass cls = classify(v);
    const CanonicalForm canonical = canonical_form(v);
    const FourVector roundtrip = act_on_four_vector(canonical.g, canonical.standard);
    const double roundtrip_rel =
        max_component_diff(roundtrip, v) / std::max(1.0, max_component_abs(v));

    OutputRecord rec;
    rec.doc["command"] = "little-group";
    rec.doc["input"] = Json{{"vector", json_four_vector(v)},
                            {"probe", opt.probe ? Json(*opt.probe) : Json(nullptr)},
                            {"degrees", opt.degrees}};
    rec.doc["input_digest"] = digest(rec.doc["input"]);
    Json result{{"class", tag_name(cls.tag)},
                {"mass_squared", cls.mass_squared},
                {"standard", json_four_vector(canonical.standard)},
                {"g", json_mat2(canonical.g.mat())},
                {"g_provenance", json_provenance(canonical.g)}};
    if (probe) {
        const LittleGroupElement el = little_group_generator(cls, probe->kind, probe->param);
        result["probe"] = Json{{"token", probe->token},
                               {"param", el.param},
                               {"matrix", json_mat2(el.element.mat())},
                               {"wigner_residual", verify_little_group(el.element, v)}};
    }
    rec.doc["result"] = std::move(result);
    rec.doc["residuals"] =
        Json{{"canonical_roundtrip_relative", roundtrip_rel},
             {"det_drift", std::abs(canonical.g.mat().det() - Complex(1.0))}};
    finish(rec, opt.tolerance);
    return rec;
}

OutputRecord cmd_stokes(const StokesOptions& opt) {
    const bool params_mode = opt.amplitude.has_value() || opt.sigma.has_value();
    if (params_mode == opt.samples_path.has_value())
        throw UsageError("give either --amplitude/--phi/--sigma or --samples, not both");

    OutputRecord rec;
    rec.doc["command"] = "stokes";

    std::optional<CoherencyMatrix> coherency;
    double a = 0.0, sigma = 0.0, phi = 0.0;
    if (params_mode) {
        if (!opt.amplitude || !opt.sigma)
            throw UsageError("closed-form mode needs both --amplitude and --sigma");
        a = *opt.amplitude;
        sigma = *opt.sigma;
        phi = to_radians(opt.phi, opt.degrees);
        rec.doc["input"] = Json{{"amplitude", a}, {"phi", phi}, {"sigma", sigma}};
        coherency = coherency_closed_form(a, phi, sigma);
    } else {
        std::ifstream in(*opt.samples_path);
        if (!in) throw UsageError("cannot open samples file '" + *opt.samples_path + "'");
        const SampledSignal sig = load_sampled_signal_csv(in);
        rec.doc["input"] = Json{{"samples", *opt.samples_path},
                                {"count", sig.samples.size()},
                                {"dt", sig.dt},
                                {"window", sig.window}};
        coherency = coherency_from_samples(sig);
    }
    rec.doc["input_digest"] = digest(rec.doc["input"]);

    const CoherencyMatrix& c = *coherency;
    const auto [lam1, lam2] = diagonalize_coherency(c);
    const StokesVector s = stokes_from_coherency(c);
    const double radius = poincare_radius(s);
    const double coherence = degree_of_coherence(c);

    rec.doc["result"] = Json{
        {"coherency", json_mat2(c.mat())},
        {"eigenvalues", Json::array({lam1, lam2})},
        {"stokes", Json{{"s0", s.s0}, {"s3", s.s3}, {"s1", s.s1}, {"s2", s.s2}}},
        {"radius", radius},
        {"degree_of_coherence", coherence}};

    const CoherencyMatrix back = coherency_from_stokes(s);
    const double roundtrip = max_abs_diff(back.mat(), c.mat()) / std::max(1.0, c.mat().max_abs());
    Json residuals{{"stokes_roundtrip_relative", roundtrip}};
    if (params_mode) {
        const double a4 = a * a * a * a;
        const double det_expected = a4 * -std::expm1(-2.0 * sigma);
        residuals["det_law_relative_a4"] =
            std::abs(c.mat().det().real() - det_expected) / std::max(a4, 1e-300);
        residuals["radius_law_relative_s0"] =
            std::abs(radius - s.s0 * std::exp(-sigma)) / std::max(s.s0, 1e-300);
    }
    rec.doc["residuals"] = std::move(residuals);
    finish(rec, opt.tolerance);
    return rec;
}

OutputRecord cmd_bridge(const BridgeOptions& opt) {
    if (opt.n < 2) throw UsageError("sweep needs --n >= 2");
    const double m = opt.mass, p = opt.momentum;
    const double bound = sigma_max(m, p);  // validates m > 0, p > 0

    const bool chi_sweep = opt.sweep == SweepVariable::Chi;
    double lo = opt.min.value_or(0.0);
    double hi = opt.max.value_or(chi_sweep ? kPi / 2.0 : bound);
    if (chi_sweep && opt.degrees) {
        if (opt.min) lo = to_radians(lo, true);
        if (opt.max) hi = to_radians(hi, true);
    }
    if (!(lo >= 0.0) || !(hi >= lo)) throw UsageError("sweep range must satisfy 0 <= min <= max");
    if (chi_sweep && hi > kPi / 2.0) throw UsageError("chi sweep range must stay within [0, pi/2]");

    const double shell = m * m + 2.0 * p * p;

    OutputRecord rec;
    rec.doc["command"] = "bridge";
    rec.doc["input"] = Json{{"mass", m},
                            {"momentum", p},
                            {"sweep", chi_sweep ? "chi" : "sigma"},
                            {"n", opt.n},
                            {"min", lo},
                            {"max", hi}};
    rec.doc["input_digest"] = digest(rec.doc["input"]);

    rec.table_header = {"chi", "sigma", "e1", "e2", "m1", "m2", "residual"};
    Json rows = Json::array();
    double max_residual = 0.0;
    int out_of_range = 0;
    for (int i = 0; i < opt.n; ++i) {
        const double x =
            lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(opt.n - 1);
        double chi = 0.0, sigma = 0.0;
        bool reachable = true;
        if (chi_sweep) {
            chi = x;
            sigma = sigma_from_chi(DeSitterState(m, chi, p));
        } else {
            sigma = x;
            try {
                chi = chi_from_sigma(m, p, sigma);
            } catch (const OutOfRangeError&) {
                reachable = false;
            }
        }
        if (!reachable) {
            ++out_of_range;
            rows.push_back(Json{{"chi", nullptr},
                                {"sigma", sigma},
                                {"e1", nullptr},
                                {"e2", nullptr},
                                {"m1", nullptr},
                                {"m2", nullptr},
                                {"residual", nullptr},
                                {"status", "out_of_range"}});
            rec.table_rows.push_back({"", format_double(sigma), "", "", "", "", "out_of_range"});
            continue;
        }
        const DeSitterState state(m, chi, p);
        const EnergyPair e = energies(state);
        const MassPair mp = mass_decompose(m, chi);
        const double residual = std::abs(e.e1 * e.e1 + e.e2 * e.e2 - shell) / shell;
        max_residual = std::max(max_residual, residual);
        rows.push_back(Json{{"chi", chi},
                            {"sigma", sigma},
                            {"e1", e.e1},
                            {"e2", e.e2},
                            {"m1", mp.m1},
                            {"m2", mp.m2},
                            {"residual", residual},
                            {"status", "ok"}});
        rec.table_rows.push_back({format_double(chi), format_double(sigma), format_double(e.e1),
                                  format_double(e.e2), format_double(mp.m1),
                                  format_double(mp.m2), format_double(residual)});
    }
    rec.doc["result"] = Json{{"rows", std::move(rows)},
                             {"row_count", opt.n},
                             {"out_of_range_count", out_of_range},
                             {"sigma_max", bound}};
    rec.doc["residuals"] = Json{{"max_energy_residual", max_residual}};
    finish(rec, opt.tolerance);
    return rec;
}

OutputRecord cmd_hyperbola(const HyperbolaOptions& opt) {
    const std::vector<double> masses = parse_doubles(opt.masses, "masses");
    const std::vector<double> range = parse_doubles(opt.p_range, "p-range");
    if (range.size() != 2) throw UsageError("p-range must be lo,hi");

    const std::vector<HyperbolaRow> rows = hyperbola_sweep(masses, {range[0], range[1]}, opt.n);

    OutputRecord rec;
    rec.doc["command"] = "hyperbola";
    rec.doc["input"] = Json{{"masses", masses},
                            {"p_range", Json::array({range[0], range[1]})},
                            {"n", opt.n}};
    rec.doc["input_digest"] = digest(rec.doc["input"]);

    rec.table_header = {"m", "p", "e"};
    Json jrows = Json::array();
    double max_defect = 0.0;
    for (const HyperbolaRow& row : rows) {
        const double shell = row.m * row.m + row.p * row.p;
        max_defect = std::max(max_defect,
                              std::abs(row.e * row.e - shell) / std::max(1.0, shell));
        jrows.push_back(Json{{"m", row.m}, {"p", row.p}, {"e", row.e}});
        rec.table_rows.push_back({format_double(row.m), format_double(row.p),
                                  format_double(row.e)});
    }
    rec.doc["result"] = Json{{"rows", std::move(jrows)},
                             {"row_count", rows.size()}};
    rec.doc["residuals"] = Json{{"max_mass_shell_defect", max_defect}};
    finish(rec, opt.tolerance);
    return rec;
}

}  // namespace poincare::cli
