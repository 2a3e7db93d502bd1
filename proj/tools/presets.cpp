#include "presets.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

#include "rinorm/errors.hpp"
#include "rinorm/gx.hpp"
#include "rinorm/lebesgue.hpp"
#include "rinorm/maximal.hpp"
#include "rinorm/norms.hpp"
#include "rinorm/random_gen.hpp"
#include "rinorm/serialize.hpp"
#include "rinorm/witness.hpp"

namespace rinorm::tools {

namespace {

using json = nlohmann::ordered_json;

std::string fmt(real x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", static_cast<double>(x));
    return buf;
}

double num(real x) { return static_cast<double>(x); }

class Csv {
  public:
    explicit Csv(std::string header) : text_(std::move(header)) { text_ += '\n'; }
    template <typename... Ts>
    void row(Ts... cells) {
        bool first = true;
        ((text_ += (first ? "" : ","), text_ += cell(cells), first = false), ...);
        text_ += '\n';
    }
    const std::string& str() const { return text_; }

  private:
    static std::string cell(real x) { return fmt(x); }
    static std::string cell(double x) { return fmt(static_cast<real>(x)); }
    static std::string cell(int x) { return std::to_string(x); }
    static std::string cell(long x) { return std::to_string(x); }
    static std::string cell(std::size_t x) { return std::to_string(x); }
    static std::string cell(const char* s) { return s; }
    static std::string cell(const std::string& s) { return s; }
    std::string text_;
};

struct Pipeline {
    json inputs = json::object();
    json checks = json::array();
    bool pass = true;
    std::vector<std::pair<std::string, std::string>> csvs;

    void check(const std::string& name, bool ok, json measured) {
        checks.push_back(json{{"name", name}, {"pass", ok}, {"measured", std::move(measured)}});
        pass = pass && ok;
    }
    void csv(const std::string& name, const Csv& table) { csvs.emplace_back(name, table.str()); }
};

json parse_config(const std::string& text) {
    if (text.empty()) return json::object();
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ConfigInvalid("config is not valid JSON");
    if (!j.is_object()) throw ConfigInvalid("config must be a JSON object");
    return j;
}

real cfg_num(const json& j, const char* key, real fallback) {
    if (!j.contains(key)) return fallback;
    if (j[key].is_string() && j[key].template get<std::string>() == "inf")
        return std::numeric_limits<real>::infinity();
    if (!j[key].is_number()) throw ConfigInvalid(std::string("field must be numeric: ") + key);
    return static_cast<real>(j[key].template get<double>());
}

NormSpec spec_from_config(const json& j) { return spec_from_json(j.dump()); }

json num_or_inf(real x) {
    if (std::isinf(static_cast<double>(x))) return json("inf");
    return json(static_cast<double>(x));
}

YoungFunction young_from_config(const json& j) {
    return spec_from_json(json{{"family", "orlicz"}, {"A", j}}.dump()).young();
}

ConcavePhi phi_from_config(const json& j) {
    return spec_from_json(json{{"family", "lambda-phi"}, {"phi", j}}.dump()).phi();
}

// --- shared pipeline pieces -------------------------------------------------

struct ComboStats {
    real min_ratio = std::numeric_limits<real>::infinity();
    int combos = 0;
};

template <typename RatioFn>
ComboStats concavity_suite(Rng& rng, int combos, RatioFn&& ratio_of) {
    ComboStats stats;
    for (int i = 0; i < combos; ++i) {
        const int members = rng.uniform_int(2, 4);
        std::vector<StepFunction> fs;
        std::vector<real> ws;
        real total = 0;
        for (int m = 0; m < members; ++m) {
            fs.push_back(random_monotone_unit(rng, 6));
            ws.push_back(rng.uniform(0.1L, 1.0L));
            total += ws.back();
        }
        for (real& w : ws) w /= total;
        try {
            const real ratio = ratio_of(ConvexCombo(std::move(fs), std::move(ws)));
            stats.min_ratio = std::min(stats.min_ratio, ratio);
            ++stats.combos;
        } catch (const DegenerateCombo&) {
        }
    }
    return stats;
}

real harmonic(int n) {
    real h = 0;
    for (int k = 1; k <= n; ++k) h += 1.0L / k;
    return h;
}

struct RwRun {
    real sup = 0;
    real arg = 0;
};

RwRun rw_sup(const StepFunction& u, const NormSpec& spec, real domain_end, int grid_n,
             Csv* curve, const std::string& label) {
    const Grid1D grid(0.0L, domain_end, grid_n);
    const SampledField field = maximal_field(u, spec, grid, AllPairs{});
    std::vector<real> ss;
    const int points = 64;
    for (int i = 0; i < points; ++i)
        ss.push_back(domain_end * 1e-3L * std::pow(1000.0L, static_cast<real>(i) / (points - 1)));
    const EstimateReport report = riesz_wiener_profile(u, spec, field, ss);
    if (curve)
        for (const CurvePoint& pt : report.curve) curve->row(label, pt.x, pt.value);
    return {report.sup_value, report.arg_sup};
}

struct LevelsetRow {
    int pieces;
    real measure;
    real target;
};

LevelsetRow levelset_run(int pieces, int grid_n) {
    const HWitness w = lorentz_h_witness(1.0L, 2.0L, 1.5L, pieces);
    const Transplant tr = transplant(w);
    real total = 0;
    for (real a : w.weights) total += a;
    const Grid1D grid(0.0L, total, grid_n);
    const SampledField field =
        maximal_field(tr.u, NormSpec::lorentz(1.0L, 2.0L), grid, ExplicitList{tr.balls});
    return {pieces, level_set_measure(field, 1.0L), harmonic(pieces)};
}

// --- presets -----------------------------------------------------------------

void preset_lorentz(Pipeline& out, const json& cfg, std::uint64_t seed, int n) {
    const real p = cfg_num(cfg, "p", 2.0L);
    const real q = cfg_num(cfg, "q", 1.0L);
    const NormSpec spec = NormSpec::lorentz(p, q);
    out.inputs["p"] = num_or_inf(p);
    out.inputs["q"] = num_or_inf(q);
    if (q <= p) {
        const int combos = n > 0 ? n : 200;
        out.inputs["combos"] = combos;
        Rng rng(seed);
        const ComboStats stats = concavity_suite(
            rng, combos, [&](const ConvexCombo& c) { return concavity_ratio(c, spec); });
        out.check("concavity-min-ratio", stats.min_ratio >= 1.0L - 1e-9L,
                  json{{"min_ratio", num(stats.min_ratio)}, {"combos", stats.combos}});
        Csv curve("family,s,ratio");
        const StepFunction u = StepFunction::indicator(Interval(0.0L, 1.0L));
        const RwRun coarse = rw_sup(u, spec, 2.0L, 256, nullptr, "");
        const RwRun fine = rw_sup(u, spec, 2.0L, 512, &curve, spec.name());
        const real rel = std::fabs(fine.sup - coarse.sup) / std::max(fine.sup, coarse.sup);
        out.check("riesz-wiener-stability", rel <= 0.2L,
                  json{{"sup_coarse", num(coarse.sup)},
                       {"sup_fine", num(fine.sup)},
                       {"rel_change", num(rel)}});
        out.csv("riesz_wiener_curve.csv", curve);
    } else {
        const int pieces = n > 0 ? n : 40;
        out.inputs["pieces"] = pieces;
        // default height scales the canonical 1.5-at-(1,2) choice to sit the
        // same comfortable margin above the (q/p)^{1/q} threshold
        const real c = cfg_num(
            cfg, "c", 1.5L * std::pow(q / p, 1.0L / q) / std::sqrt(2.0L));
        out.inputs["height"] = num(c);
        const HWitness w = lorentz_h_witness(p, q, c, pieces);
        const HWitnessReport report = verify_h_witness(w, spec);
        const real expected = c * std::pow(p / q, 1.0L / q);
        real max_err = 0;
        Csv table("k,left,right,weight,value,partial_weight_sum");
        for (const auto& e : report.entries) {
            max_err = std::max(max_err, std::fabs(e.averaged_value - expected));
            table.row(e.k, e.interval.left, e.interval.right, e.weight, e.averaged_value,
                      e.partial_weight_sum);
        }
        out.check("witness-per-k-exact", max_err <= 1e-9L,
                  json{{"expected", num(expected)}, {"max_abs_err", num(max_err)}});
        out.check("witness-weight-sum",
                  std::fabs(report.weight_sum - harmonic(pieces)) <= 1e-12L,
                  json{{"weight_sum", num(report.weight_sum)},
                       {"harmonic", num(harmonic(pieces))}});
        out.check("witness-verdict", report.verdict == "violates-averaging",
                  json{{"verdict", report.verdict}});
        out.csv("witness_values.csv", table);
        Csv levels("pieces,measure,harmonic");
        bool bound = true, increasing = true;
        real prev = 0;
        for (int pcs : {8, 16}) {
            const LevelsetRow row = levelset_run(pcs, 512);
            levels.row(row.pieces, row.measure, row.target);
            bound = bound && row.measure >= row.target;
            increasing = increasing && row.measure > prev;
            prev = row.measure;
        }
        out.check("levelset-growth", bound && increasing,
                  json{{"lower_bound_holds", bound}, {"strictly_increasing", increasing}});
        out.csv("levelset.csv", levels);
    }
}

void preset_orlicz(Pipeline& out, const json& cfg, std::uint64_t seed, int n) {
    const json young_cfg =
        cfg.contains("A") ? cfg["A"] : json{{"family", "power"}, {"p", 2}};
    const YoungFunction a = young_from_config(young_cfg);
    const NormSpec spec = NormSpec::orlicz(a);
    out.inputs["A"] = young_cfg;
    if (a.doubling()) {
        const int attempts = n > 0 ? n : 50;
        out.inputs["attempts"] = attempts;
        Rng rng(seed);
        Csv table("attempt,intervals,weight_sum,modular,ratio");
        bool all_hold = true;
        real max_ratio = 0;
        for (int i = 0; i < attempts; ++i) {
            const StepFunction base = random_step(rng, 8, 1.0L, 2.5L);
            const StepFunction f =
                superpose(base, StepFunction::indicator(Interval(0.0L, 1.0L), 1.5L));
            const int cuts = rng.uniform_int(2, 4);
            std::vector<real> edges{0.0L, 1.0L};
            for (int cix = 0; cix < cuts - 1; ++cix) edges.push_back(rng.uniform(0.05L, 0.95L));
            std::sort(edges.begin(), edges.end());
            real weight_sum = 0;
            int used = 0;
            for (std::size_t e = 0; e + 1 < edges.size(); ++e) {
                if (edges[e + 1] - edges[e] < 1e-6L) continue;
                const Interval piece(edges[e], edges[e + 1]);
                const StepFunction slice = rearrangement(restrict_to(f, piece));
                const auto value = [&](real scale) {
                    return rep_norm(dilate(slice, scale), spec);
                };
                if (!(value(piece.length()) > 1.0L)) continue;
                real hi = piece.length();
                while (value(hi) > 1.0L) hi *= 2;
                real lo = hi / 2;
                for (int it = 0; it < 120; ++it) {
                    const real mid = 0.5L * (lo + hi);
                    (value(mid) > 1.0L ? lo : hi) = mid;
                }
                weight_sum += std::max(piece.length(), 0.999L * lo);
                ++used;
            }
            const real modular = young_modular(f, a);
            const bool holds = weight_sum < modular && std::isfinite(modular);
            all_hold = all_hold && holds;
            if (modular > 0) max_ratio = std::max(max_ratio, weight_sum / modular);
            table.row(i, used, weight_sum, modular,
                      modular > 0 ? weight_sum / modular : 0.0L);
        }
        out.check("h-chain", all_hold,
                  json{{"attempts", attempts}, {"max_weight_to_modular", num(max_ratio)}});
        out.csv("h_chain.csv", table);
    } else {
        const real floor_value = 0.75L;
        const StepFunction probe = orlicz_non_doubling_probe(1e-30L, 8);
        std::vector<real> ts;
        for (int i = 1; i <= 12; ++i) ts.push_back(std::pow(10.0L, static_cast<real>(-i)));
        const ProbeCurve curve = lac_probe(probe, spec, ts);
        real min_value = std::numeric_limits<real>::infinity();
        Csv table("t,value");
        for (std::size_t i = 0; i < ts.size(); ++i) {
            min_value = std::min(min_value, curve.values[i]);
            table.row(curve.ts[i], curve.values[i]);
        }
        out.check("probe-floor", min_value >= floor_value,
                  json{{"floor", num(floor_value)}, {"min_value", num(min_value)}});
        Csv modulars("delta,modular_at_floor");
        real prev = 0;
        bool diverging = true;
        for (real delta : {1e-10L, 1e-20L, 1e-30L}) {
            const StepFunction deep = orlicz_non_doubling_probe(delta, 8);
            const real modular = young_modular(scale(deep, 1.0L / floor_value), a);
            modulars.row(delta, modular);
            diverging = diverging && modular > prev;
            prev = modular;
        }
        out.check("modular-divergence", diverging && prev > 1e3L,
                  json{{"modular_at_1e-30", num(prev)}});
        out.csv("probe_curve.csv", table);
        out.csv("modular_divergence.csv", modulars);
    }
}

void preset_lambda(Pipeline& out, const json& cfg, std::uint64_t seed, int n) {
    const json phi_cfg =
        cfg.contains("phi") ? cfg["phi"] : json{{"family", "power"}, {"alpha", 0.5}};
    const ConcavePhi phi = phi_from_config(phi_cfg);
    const NormSpec spec = NormSpec::lambda_phi(phi);
    out.inputs["phi"] = phi_cfg;
    if (phi.zero_plus() == 0) {
        const int combos = n > 0 ? n : 200;
        out.inputs["combos"] = combos;
        Rng rng(seed);
        const ComboStats stats = concavity_suite(
            rng, combos, [&](const ConvexCombo& c) { return concavity_ratio(c, spec); });
        out.check("concavity-min-ratio", stats.min_ratio >= 1.0L - 1e-9L,
                  json{{"min_ratio", num(stats.min_ratio)}, {"combos", stats.combos}});
        std::vector<real> ts;
        for (int i = 0; i <= 6; ++i) ts.push_back(std::pow(10.0L, static_cast<real>(-i)));
        const ProbeCurve curve =
            lac_probe(StepFunction::indicator(Interval(0.0L, 1.0L)), spec, ts);
        Csv table("t,value");
        for (std::size_t i = 0; i < ts.size(); ++i) table.row(curve.ts[i], curve.values[i]);
        const real decay = curve.values.front() / curve.values.back();
        out.check("lac-decay", decay >= 10.0L,
                  json{{"initial", num(curve.values.front())},
                       {"final", num(curve.values.back())},
                       {"factor", num(decay)}});
        out.csv("probe_curve.csv", table);
    } else {
        const int pieces = n > 0 ? n : 8;
        out.inputs["pieces"] = pieces;
        const StepFunction g = StepFunction::indicator(
            Interval(0.0L, 1.0L), 2.5L / phi.zero_plus());
        const HWitness w = witness_from_non_lac(g, spec, pieces);
        const HWitnessReport report = verify_h_witness(w, spec);
        Csv table("k,left,right,weight,value,partial_weight_sum");
        for (const auto& e : report.entries)
            table.row(e.k, e.interval.left, e.interval.right, e.weight, e.averaged_value,
                      e.partial_weight_sum);
        out.check("witness-found", report.entries.size() == static_cast<std::size_t>(pieces),
                  json{{"pieces", pieces}});
        out.check("witness-verdict", report.verdict == "violates-averaging",
                  json{{"verdict", report.verdict}, {"weight_sum", num(report.weight_sum)}});
        out.csv("witness_values.csv", table);
    }
    (void)seed;
}

void preset_marcinkiewicz(Pipeline& out, const json& cfg, std::uint64_t seed, int n) {
    (void)seed;
    const json phi_cfg =
        cfg.contains("phi") ? cfg["phi"] : json{{"family", "power"}, {"alpha", 0.5}};
    const ConcavePhi phi = phi_from_config(phi_cfg);
    const NormSpec spec = NormSpec::marcinkiewicz(phi);
    out.inputs["phi"] = phi_cfg;
    const bool power_sub_one =
        phi.family() == ConcavePhi::Family::Power && phi.alpha() < 1.0L;
    const bool affine_jump = phi.family() == ConcavePhi::Family::Affine && phi.b() > 0;
    if (power_sub_one) {
        const int ppd = n > 0 ? n : 64;
        out.inputs["pieces_per_decade"] = ppd;
        const StepFunction u = marcinkiewicz_extremal(phi.alpha(), 1e-4L, 1e2L, ppd);
        Csv sandwich("s,product");
        real lo = std::numeric_limits<real>::infinity(), hi = 0;
        for (std::size_t i = 0; i < u.piece_count(); ++i) {
            const real s = u.piece_upper(i);
            const real product = partial_integral(u, s) / s * phi.evaluate(s);
            sandwich.row(s, product);
            lo = std::min(lo, product);
            hi = std::max(hi, product);
        }
        out.check("sandwich", lo >= 0.95L && hi <= 2.05L,
                  json{{"min_product", num(lo)}, {"max_product", num(hi)}});
        std::vector<real> ts;
        for (int i = 0; i <= 9; ++i) ts.push_back(std::pow(10.0L, -static_cast<real>(i) / 3));
        const ProbeCurve curve = lac_probe(u, spec, ts);
        Csv table("t,value");
        real min_value = std::numeric_limits<real>::infinity();
        for (std::size_t i = 0; i < ts.size(); ++i) {
            table.row(curve.ts[i], curve.values[i]);
            min_value = std::min(min_value, curve.values[i]);
        }
        out.check("probe-floor", min_value >= 0.95L, json{{"min_value", num(min_value)}});
        out.csv("sandwich.csv", sandwich);
        out.csv("probe_curve.csv", table);
    } else if (affine_jump) {
        std::vector<real> ts;
        for (int i = 0; i <= 6; ++i) ts.push_back(std::pow(10.0L, -static_cast<real>(i)));
        const ProbeCurve curve =
            lac_probe(StepFunction::indicator(Interval(0.0L, 1.0L)), spec, ts);
        Csv table("t,value");
        real min_value = std::numeric_limits<real>::infinity();
        for (std::size_t i = 0; i < ts.size(); ++i) {
            table.row(curve.ts[i], curve.values[i]);
            min_value = std::min(min_value, curve.values[i]);
        }
        out.check("probe-floor", min_value >= phi.b(),
                  json{{"floor", num(phi.b())}, {"min_value", num(min_value)}});
        out.csv("probe_curve.csv", table);
    } else {
        std::vector<real> ts;
        for (int i = 0; i <= 6; ++i) ts.push_back(std::pow(10.0L, -static_cast<real>(i)));
        const ProbeCurve curve =
            lac_probe(StepFunction::indicator(Interval(0.0L, 1.0L)), spec, ts);
        Csv table("t,value");
        for (std::size_t i = 0; i < ts.size(); ++i) table.row(curve.ts[i], curve.values[i]);
        const real decay = curve.values.front() / curve.values.back();
        out.check("lac-decay", decay >= 10.0L,
                  json{{"initial", num(curve.values.front())},
                       {"final", num(curve.values.back())},
                       {"factor", num(decay)}});
        out.csv("probe_curve.csv", table);
    }
}

void preset_riesz_wiener(Pipeline& out, const json& cfg, std::uint64_t seed, int n) {
    (void)cfg;
    (void)seed;
    (void)n;
    const StepFunction u = StepFunction::indicator(Interval(0.0L, 1.0L));
    Csv curves("family,s,ratio");
    const std::pair<const char*, NormSpec> fams[] = {
        {"stability-l1", NormSpec::lebesgue(1.0L)},
        {"stability-l21", NormSpec::lorentz(2.0L, 1.0L)},
        {"stability-l22", NormSpec::lorentz(2.0L, 2.0L)},
    };
    for (const auto& [label, spec] : fams) {
        const RwRun coarse = rw_sup(u, spec, 2.0L, 256, nullptr, "");
        const RwRun fine = rw_sup(u, spec, 2.0L, 512, &curves, spec.name());
        const real rel = std::fabs(fine.sup - coarse.sup) / std::max(fine.sup, coarse.sup);
        out.check(label, rel <= 0.2L,
                  json{{"sup_coarse", num(coarse.sup)},
                       {"sup_fine", num(fine.sup)},
                       {"rel_change", num(rel)}});
    }
    Csv wit("pieces,sup_ratio,arg_sup");
    const NormSpec l12 = NormSpec::lorentz(1.0L, 2.0L);
    bool increasing = true;
    real prev = 0;
    json sups = json::array();
    for (int pieces : {8, 16, 32}) {
        const HWitness w = lorentz_h_witness(1.0L, 2.0L, 1.5L, pieces);
        const Transplant tr = transplant(w);
        const real total = harmonic(pieces);
        const RwRun run = rw_sup(tr.u, l12, total, 384, nullptr, "");
        wit.row(pieces, run.sup, run.arg);
        sups.push_back(num(run.sup));
        increasing = increasing && run.sup > prev;
        prev = run.sup;
    }
    out.check("witness-divergence", increasing, json{{"sup_ratios", sups}});
    out.csv("riesz_wiener_curves.csv", curves);
    out.csv("witness_sups.csv", wit);
}

void preset_levelset(Pipeline& out, const json& cfg, std::uint64_t seed, int n) {
    (void)cfg;
    (void)seed;
    (void)n;
    Csv table("pieces,measure,harmonic");
    bool bound = true, increasing = true;
    real prev = 0;
    for (int pieces : {8, 16, 32, 64}) {
        const LevelsetRow row = levelset_run(pieces, 2048);
        table.row(row.pieces, row.measure, row.target);
        bound = bound && row.measure >= row.target;
        increasing = increasing && row.measure > prev;
        prev = row.measure;
    }
    out.check("levelset-lower-bound", bound, json::object());
    out.check("levelset-increasing", increasing, json::object());
    out.csv("levelset.csv", table);
}

// --- custom runs --------------------------------------------------------------

std::vector<real> cfg_array(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array())
        throw ConfigInvalid(std::string("task needs numeric array: ") + key);
    std::vector<real> xs;
    for (const auto& e : j[key]) {
        if (!e.is_number()) throw ConfigInvalid(std::string("non-numeric entry in ") + key);
        xs.push_back(static_cast<real>(e.template get<double>()));
    }
    return xs;
}

struct CustomFunction {
    StepFunction f;
    bool has_witness = false;
    HWitness witness;
    std::vector<Interval> balls;
};

CustomFunction function_from_config(const json& root) {
    if (!root.contains("function") || !root["function"].is_object())
        throw ConfigInvalid("config needs a function object");
    const json& cfg = root["function"];
    if (!cfg.contains("kind") || !cfg["kind"].is_string())
        throw ConfigInvalid("function needs a kind");
    const std::string kind = cfg["kind"].template get<std::string>();
    CustomFunction fn;
    if (kind == "stepfn") {
        fn.f = step_from_json(cfg.dump());
    } else if (kind == "lorentz-witness") {
        fn.witness = lorentz_h_witness(cfg_num(cfg, "p", 1.0L), cfg_num(cfg, "q", 2.0L),
                                       cfg_num(cfg, "c", 1.5L),
                                       static_cast<int>(cfg_num(cfg, "pieces", 40.0L)));
        fn.has_witness = true;
        fn.f = fn.witness.f;
    } else if (kind == "witness") {
        fn.witness = witness_from_json(cfg.dump());
        fn.has_witness = true;
        fn.f = fn.witness.f;
    } else if (kind == "marcinkiewicz-extremal") {
        fn.f = marcinkiewicz_extremal(cfg_num(cfg, "alpha", 0.5L), cfg_num(cfg, "s_min", 1e-4L),
                                      cfg_num(cfg, "s_max", 1e2L),
                                      static_cast<int>(cfg_num(cfg, "pieces_per_decade", 64.0L)));
    } else if (kind == "non-doubling-probe") {
        fn.f = orlicz_non_doubling_probe(cfg_num(cfg, "delta", 1e-30L),
                                         static_cast<int>(cfg_num(cfg, "pieces_per_decade", 8.0L)));
    } else {
        throw ConfigInvalid("unknown function kind: " + kind);
    }
    if (root.contains("transplant")) {
        if (!fn.has_witness)
            throw ConfigInvalid("transplant requires a witness-kind function");
        const Transplant tr =
            transplant(fn.witness, static_cast<real>(root["transplant"].template get<double>()));
        fn.f = tr.u;
        fn.balls = tr.balls;
    }
    return fn;
}

void task_lac_probe(Pipeline& out, const json& task, const CustomFunction& fn,
                    const NormSpec& spec) {
    const ProbeCurve curve = lac_probe(fn.f, spec, cfg_array(task, "ts"));
    Csv table("t,value");
    real min_value = std::numeric_limits<real>::infinity();
    for (std::size_t i = 0; i < curve.ts.size(); ++i) {
        table.row(curve.ts[i], curve.values[i]);
        min_value = std::min(min_value, curve.values[i]);
    }
    json measured{{"initial", num(curve.values.front())},
                  {"final", num(curve.values.back())},
                  {"min_value", num(min_value)}};
    bool ok = true;
    if (task.contains("min_floor"))
        ok = min_value >= cfg_num(task, "min_floor", 0.0L);
    else if (task.contains("decay_factor"))
        ok = curve.values.front() / curve.values.back() >= cfg_num(task, "decay_factor", 10.0L);
    out.check("lac-probe", ok, measured);
    out.csv("probe_curve.csv", table);
}

void task_f_profile(Pipeline& out, const json& task, const CustomFunction& fn,
                    const NormSpec& spec) {
    const ProfileCurve curve = f_profile(fn.f, spec, cfg_array(task, "radii"));
    Csv table("r,value");
    for (std::size_t i = 0; i < curve.radii.size(); ++i)
        table.row(curve.radii[i], curve.values[i]);
    out.check("f-profile-monotone", curve.monotone_ok,
              json{{"max_violation", num(curve.max_violation)}});
    out.csv("f_profile.csv", table);
}

void task_partition(Pipeline& out, const json& task, const CustomFunction& fn,
                    const NormSpec& spec) {
    const Partition partition(cfg_array(task, "cuts"));
    const PartitionReport report = partition_ratios(fn.f, partition, spec);
    Csv table("piece,left,right,value");
    for (std::size_t k = 0; k < partition.size(); ++k)
        table.row(k, partition.piece(k).left, partition.piece(k).right,
                  report.piece_values[k]);
    const bool ok = !task.contains("min_sum_ratio") ||
                    report.sum_ratio >= cfg_num(task, "min_sum_ratio", 0.0L);
    out.check("partition", ok,
              json{{"sum_ratio", num(report.sum_ratio)},
                   {"min_ratio", num(report.min_ratio)},
                   {"norm", num(report.norm)}});
    out.csv("partition.csv", table);
}

void task_verify_witness(Pipeline& out, const json& task, const CustomFunction& fn,
                         const NormSpec& spec) {
    if (!fn.has_witness) throw ConfigInvalid("verify-witness needs a witness-kind function");
    const HWitnessReport report =
        verify_h_witness(fn.witness, spec, cfg_num(task, "divergence_bound", 2.0L));
    Csv table("k,left,right,weight,value,partial_weight_sum");
    for (const auto& e : report.entries)
        table.row(e.k, e.interval.left, e.interval.right, e.weight, e.averaged_value,
                  e.partial_weight_sum);
    bool ok = true;
    if (task.contains("expect"))
        ok = report.verdict == task["expect"].template get<std::string>();
    out.check("verify-witness", ok,
              json{{"verdict", report.verdict}, {"weight_sum", num(report.weight_sum)}});
    out.csv("witness_values.csv", table);
}

void task_gx(Pipeline& out, const json& task, const CustomFunction& fn, const NormSpec& spec) {
    const real value = gx_value(fn.f, spec);
    json measured{{"gx", num(value)}};
    bool ok = true;
    real closed = -1;
    if (spec.family() == NormSpec::Family::Lorentz ||
        spec.family() == NormSpec::Family::Lebesgue)
        closed = gx_closed_lorentz(fn.f, spec.p(), spec.q());
    else if (spec.family() == NormSpec::Family::LambdaPhi)
        closed = gx_closed_lambda(fn.f, spec.phi());
    else if (spec.family() == NormSpec::Family::Orlicz &&
             spec.young().family() != YoungFunction::Family::EssSupIndicator)
        measured["amemiya"] = num(gx_amemiya(fn.f, spec.young()));
    if (closed >= 0) {
        measured["closed_form"] = num(closed);
        if (task.contains("tol")) {
            const real tol = cfg_num(task, "tol", 1e-9L);
            ok = std::fabs(value - closed) <= tol * std::max<real>(1, closed);
        }
    }
    out.check("gx", ok, measured);
}

void task_maximal(Pipeline& out, const json& task, const CustomFunction& fn,
                  const NormSpec& spec) {
    if (!task.contains("grid") || !task["grid"].is_object())
        throw ConfigInvalid("maximal task needs a grid object");
    const json& g = task["grid"];
    const Grid1D grid(cfg_num(g, "a", 0.0L), cfg_num(g, "b", 1.0L),
                      static_cast<int>(cfg_num(g, "n", 256.0L)));
    CandidateStrategy strategy = AllPairs{};
    if (task.contains("candidates")) {
        const json& cand = task["candidates"];
        if (cand.is_string() && cand.template get<std::string>() == "balls") {
            if (fn.balls.empty())
                throw ConfigInvalid("candidates 'balls' needs a transplanted witness");
            strategy = ExplicitList{fn.balls};
        } else if (cand.is_array()) {
            ExplicitList list;
            for (const auto& e : cand) {
                if (!e.is_array() || e.size() != 2)
                    throw ConfigInvalid("explicit candidates must be [left, right] pairs");
                list.candidates.emplace_back(
                    static_cast<real>(e[0].template get<double>()),
                    static_cast<real>(e[1].template get<double>()));
            }
            strategy = std::move(list);
        } else if (!(cand.is_string() && cand.template get<std::string>() == "all-pairs")) {
            throw ConfigInvalid("candidates must be 'all-pairs', 'balls', or a pair list");
        }
    }
    const SampledField field = maximal_field(fn.f, spec, grid, strategy);
    Csv cells("node,value");
    for (int j = 0; j < grid.n; ++j) cells.row(grid.node(j), field.values[j]);
    out.csv("maximal_field.csv", cells);
    if (task.contains("levelset_t")) {
        const real t = cfg_num(task, "levelset_t", 1.0L);
        const real measure = level_set_measure(field, t);
        const bool ok = !task.contains("min_measure") ||
                        measure >= cfg_num(task, "min_measure", 0.0L);
        out.check("levelset", ok,
                  json{{"t", num(t)}, {"measure", num(measure)},
                       {"clipped", field.clipped}});
    } else if (task.contains("ss")) {
        const EstimateReport report =
            riesz_wiener_profile(fn.f, spec, field, cfg_array(task, "ss"));
        Csv curve("s,ratio");
        for (const CurvePoint& pt : report.curve) curve.row(pt.x, pt.value);
        out.check("riesz-wiener", true,
                  json{{"sup_ratio", num(report.sup_value)}, {"arg_sup", num(report.arg_sup)}});
        out.csv("ratio_curve.csv", curve);
    } else if (task.contains("thresholds")) {
        const std::vector<real> window = cfg_array(task, "window");
        if (window.size() != 2) throw ConfigInvalid("weak-type window must be [left, right]");
        const EstimateReport report = weak_type_profile(
            fn.f, Interval(window[0], window[1]), spec, field, cfg_array(task, "thresholds"));
        Csv curve("t,value");
        for (const CurvePoint& pt : report.curve) curve.row(pt.x, pt.value);
        out.check("weak-type", true,
                  json{{"sup_value", num(report.sup_value)}, {"arg_sup", num(report.arg_sup)}});
        out.csv("weak_type_curve.csv", curve);
    } else {
        out.check("maximal-field", true, json{{"cells", grid.n}, {"clipped", field.clipped}});
    }
}

void task_lebesgue_scan(Pipeline& out, const json& task, const CustomFunction& fn,
                        const NormSpec& spec) {
    const ScanReport report =
        lebesgue_scan(fn.f, spec, cfg_array(task, "xs"), cfg_array(task, "radii"),
                      cfg_num(task, "threshold", 0.25L));
    Csv points("x,terminal_oscillation,pass");
    Csv curves("x,r,value");
    for (const ScanPoint& pt : report.points) {
        if (pt.excluded) continue;
        points.row(pt.x, pt.terminal, pt.pass ? 1 : 0);
        for (std::size_t i = 0; i < report.radii.size(); ++i)
            curves.row(pt.x, report.radii[i], pt.oscillations[i]);
    }
    const bool ok = !task.contains("min_pass_fraction") ||
                    report.pass_fraction >= cfg_num(task, "min_pass_fraction", 0.0L);
    out.check("lebesgue-scan", ok,
              json{{"pass_fraction", num(report.pass_fraction)},
                   {"evaluated", report.evaluated_count},
                   {"excluded", report.excluded_count},
                   {"excluded_measure", num(report.excluded_measure)}});
    out.csv("scan.csv", points);
    out.csv("scan_curves.csv", curves);
}

void run_custom_impl(Pipeline& out, const json& cfg) {
    if (cfg.contains("schema_version") &&
        cfg["schema_version"] != json("1"))
        throw ConfigInvalid("unsupported schema_version");
    if (!cfg.contains("spec")) throw ConfigInvalid("config needs a spec object");
    const NormSpec spec = spec_from_config(cfg["spec"]);
    const CustomFunction fn = function_from_config(cfg);
    if (!cfg.contains("task") || !cfg["task"].is_object() || !cfg["task"].contains("name"))
        throw ConfigInvalid("config needs a task object with a name");
    const json& task = cfg["task"];
    const std::string name = task["name"].template get<std::string>();
    out.inputs["spec"] = json::parse(to_json(spec));
    out.inputs["task"] = name;
    if (name == "lac-probe")
        task_lac_probe(out, task, fn, spec);
    else if (name == "f-profile")
        task_f_profile(out, task, fn, spec);
    else if (name == "partition")
        task_partition(out, task, fn, spec);
    else if (name == "verify-witness")
        task_verify_witness(out, task, fn, spec);
    else if (name == "gx")
        task_gx(out, task, fn, spec);
    else if (name == "maximal")
        task_maximal(out, task, fn, spec);
    else if (name == "lebesgue-scan")
        task_lebesgue_scan(out, task, fn, spec);
    else
        throw ConfigInvalid("unknown task: " + name);
}

json assemble(const std::string& mode, std::uint64_t seed, int n, const Pipeline& pipe) {
    return json{{"schema_version", "1"},
                {"mode", mode},
                {"seed", seed},
                {"n", n},
                {"inputs", pipe.inputs},
                {"checks", pipe.checks},
                {"pass", pipe.pass}};
}

}  // namespace

RunReport run_preset(const std::string& name, const std::string& config_json,
                     std::uint64_t seed, int n) {
    if (n < 0) throw ConfigInvalid("--n must be non-negative");
    const json cfg = parse_config(config_json);
    Pipeline pipe;
    const auto start = std::chrono::steady_clock::now();
    // Every fixed preset parameter is valid by construction, so spec or
    // parameter rejections can only come from config overrides.
    try {
        if (name == "lorentz-pq")
            preset_lorentz(pipe, cfg, seed, n);
        else if (name == "orlicz-delta2")
            preset_orlicz(pipe, cfg, seed, n);
        else if (name == "lambda-phi")
            preset_lambda(pipe, cfg, seed, n);
        else if (name == "marcinkiewicz")
            preset_marcinkiewicz(pipe, cfg, seed, n);
        else if (name == "riesz-wiener")
            preset_riesz_wiener(pipe, cfg, seed, n);
        else if (name == "levelset")
            preset_levelset(pipe, cfg, seed, n);
        else
            throw UnknownPreset("unknown preset: " + name);
    } catch (const InvalidSpec& e) {
        throw ConfigInvalid(e.what());
    } catch (const InvalidParameters& e) {
        throw ConfigInvalid(e.what());
    }
    const auto stop = std::chrono::steady_clock::now();
    RunReport report;
    report.mode = name;
    report.seed = seed;
    report.n = n;
    report.pass = pipe.pass;
    report.json = assemble(name, seed, n, pipe).dump(2) + "\n";
    report.csv_files = pipe.csvs;
    report.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    return report;
}

RunReport run_custom(const std::string& config_json, std::uint64_t seed, int n) {
    if (n < 0) throw ConfigInvalid("--n must be non-negative");
    if (config_json.empty()) throw ConfigInvalid("custom runs need --config");
    const json cfg = parse_config(config_json);
    Pipeline pipe;
    const auto start = std::chrono::steady_clock::now();
    // Fixed parameters don't exist here: everything the impl rejects as an
    // invalid spec or parameter set was user-supplied.
    try {
        run_custom_impl(pipe, cfg);
    } catch (const InvalidSpec& e) {
        throw ConfigInvalid(e.what());
    } catch (const InvalidParameters& e) {
        throw ConfigInvalid(e.what());
    }
    const auto stop = std::chrono::steady_clock::now();
    RunReport report;
    report.mode = "run";
    report.seed = seed;
    report.n = n;
    report.pass = pipe.pass;
    report.json = assemble("run", seed, n, pipe).dump(2) + "\n";
    report.csv_files = pipe.csvs;
    report.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    return report;
}

void emit_report(const RunReport& report, const std::string& out_dir) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw IoFailure("cannot create output directory: " + out_dir);
    const auto write = [&](const std::string& name, const std::string& contents) {
        std::ofstream file(fs::path(out_dir) / name, std::ios::binary);
        file << contents;
        if (!file) throw IoFailure("cannot write " + name + " under " + out_dir);
    };
    write("report.json", report.json);
    for (const auto& [name, contents] : report.csv_files) write(name, contents);
    std::ostringstream timing;
    timing << "wall_ms=" << report.wall_ms << "\n";
    write("timing.txt", timing.str());
}

}  // namespace rinorm::tools
