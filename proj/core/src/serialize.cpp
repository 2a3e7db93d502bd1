#include "rinorm/serialize.hpp"

#include <cmath>
#include <limits>

#include <nlohmann/json.hpp>

#include "rinorm/errors.hpp"

namespace rinorm {

namespace {

using nlohmann::json;

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ConfigInvalid("malformed JSON payload");
    return j;
}

double out(real x) {
    if (std::isinf(x)) return x > 0 ? std::numeric_limits<double>::infinity()
                                    : -std::numeric_limits<double>::infinity();
    return static_cast<double>(x);
}

json numbers(const std::vector<real>& xs) {
    json arr = json::array();
    for (real x : xs) arr.push_back(out(x));
    return arr;
}

std::vector<real> read_numbers(const json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_array())
        throw ConfigInvalid(std::string("missing numeric array: ") + field);
    std::vector<real> xs;
    for (const auto& e : j[field]) {
        if (!e.is_number()) throw ConfigInvalid(std::string("non-numeric entry in ") + field);
        xs.push_back(static_cast<real>(e.get<double>()));
    }
    return xs;
}

real read_number(const json& j, const char* field) {
    if (!j.contains(field)) throw ConfigInvalid(std::string("missing field: ") + field);
    const auto& e = j[field];
    if (e.is_string() && e.get<std::string>() == "inf")
        return std::numeric_limits<real>::infinity();
    if (!e.is_number()) throw ConfigInvalid(std::string("non-numeric field: ") + field);
    return static_cast<real>(e.get<double>());
}

std::string read_string(const json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_string())
        throw ConfigInvalid(std::string("missing string field: ") + field);
    return j[field].get<std::string>();
}

json exponent(real x) {
    if (std::isinf(static_cast<double>(x))) return json("inf");
    return json(out(x));
}

json step_to_value(const StepFunction& u) {
    return json{{"breakpoints", numbers(u.breakpoints())}, {"values", numbers(u.values())}};
}

StepFunction step_from_value(const json& j) {
    if (!j.is_object()) throw ConfigInvalid("step function payload must be an object");
    try {
        return StepFunction(read_numbers(j, "breakpoints"), read_numbers(j, "values"));
    } catch (const ConfigInvalid&) {
        throw;
    } catch (const Error& e) {
        throw ConfigInvalid(std::string("invalid step function: ") + e.what());
    }
}

json young_to_value(const YoungFunction& fn) {
    switch (fn.family()) {
        case YoungFunction::Family::Power:
            return json{{"family", "power"}, {"p", out(fn.p())}};
        case YoungFunction::Family::PowerLog:
            return json{{"family", "power-log"}, {"p", out(fn.p())}, {"a", out(fn.a())}};
        case YoungFunction::Family::ExpMinusOne: return json{{"family", "exp-minus-one"}};
        default: return json{{"family", "ess-sup"}};
    }
}

YoungFunction young_from_value(const json& j) {
    if (!j.is_object()) throw ConfigInvalid("Young function payload must be an object");
    const std::string family = read_string(j, "family");
    try {
        if (family == "power") return YoungFunction::power(read_number(j, "p"));
        if (family == "power-log")
            return YoungFunction::power_log(read_number(j, "p"), read_number(j, "a"));
        if (family == "exp-minus-one") return YoungFunction::exp_minus_one();
        if (family == "ess-sup") return YoungFunction::ess_sup_indicator();
    } catch (const ConfigInvalid&) {
        throw;
    } catch (const Error& e) {
        throw ConfigInvalid(std::string("invalid Young function: ") + e.what());
    }
    throw ConfigInvalid("unknown Young function family: " + family);
}

json phi_to_value(const ConcavePhi& phi) {
    if (phi.family() == ConcavePhi::Family::Power)
        return json{{"family", "power"}, {"alpha", out(phi.alpha())}};
    return json{{"family", "affine"}, {"b", out(phi.b())}, {"m", out(phi.m())}};
}

ConcavePhi phi_from_value(const json& j) {
    if (!j.is_object()) throw ConfigInvalid("phi payload must be an object");
    const std::string family = read_string(j, "family");
    try {
        if (family == "power") return ConcavePhi::power(read_number(j, "alpha"));
        if (family == "affine") return ConcavePhi::affine(read_number(j, "b"), read_number(j, "m"));
    } catch (const ConfigInvalid&) {
        throw;
    } catch (const Error& e) {
        throw ConfigInvalid(std::string("invalid phi: ") + e.what());
    }
    throw ConfigInvalid("unknown phi family: " + family);
}

json spec_to_value(const NormSpec& spec) {
    switch (spec.family()) {
        case NormSpec::Family::Lebesgue:
            return json{{"family", "lebesgue"}, {"p", exponent(spec.p())}};
        case NormSpec::Family::Lorentz:
            return json{{"family", "lorentz"}, {"p", exponent(spec.p())}, {"q", exponent(spec.q())}};
        case NormSpec::Family::Orlicz:
            return json{{"family", "orlicz"}, {"A", young_to_value(spec.young())}};
        case NormSpec::Family::LambdaPhi:
            return json{{"family", "lambda-phi"}, {"phi", phi_to_value(spec.phi())}};
        default:
            return json{{"family", "marcinkiewicz"}, {"phi", phi_to_value(spec.phi())}};
    }
}

NormSpec spec_from_value(const json& j) {
    if (!j.is_object()) throw ConfigInvalid("norm spec payload must be an object");
    const std::string family = read_string(j, "family");
    try {
        if (family == "lebesgue") return NormSpec::lebesgue(read_number(j, "p"));
        if (family == "lorentz")
            return NormSpec::lorentz(read_number(j, "p"), read_number(j, "q"));
        if (family == "orlicz") {
            if (!j.contains("A")) throw ConfigInvalid("orlicz spec needs field A");
            return NormSpec::orlicz(young_from_value(j["A"]));
        }
        if (family == "lambda-phi") {
            if (!j.contains("phi")) throw ConfigInvalid("lambda-phi spec needs field phi");
            return NormSpec::lambda_phi(phi_from_value(j["phi"]));
        }
        if (family == "marcinkiewicz") {
            if (!j.contains("phi")) throw ConfigInvalid("marcinkiewicz spec needs field phi");
            return NormSpec::marcinkiewicz(phi_from_value(j["phi"]));
        }
    } catch (const ConfigInvalid&) {
        throw;
    } catch (const Error& e) {
        throw ConfigInvalid(std::string("invalid norm spec: ") + e.what());
    }
    throw ConfigInvalid("unknown norm family: " + family);
}

}  // namespace

std::string to_json(const StepFunction& u) { return step_to_value(u).dump(); }

StepFunction step_from_json(const std::string& text) { return step_from_value(parse(text)); }

std::string to_json(const NormSpec& spec) { return spec_to_value(spec).dump(); }

NormSpec spec_from_json(const std::string& text) { return spec_from_value(parse(text)); }

std::string to_json(const Partition& partition) {
    return json{{"cuts", numbers(partition.cuts)}}.dump();
}

Partition partition_from_json(const std::string& text) {
    const json j = parse(text);
    try {
        return Partition(read_numbers(j, "cuts"));
    } catch (const ConfigInvalid&) {
        throw;
    } catch (const Error& e) {
        throw ConfigInvalid(std::string("invalid partition: ") + e.what());
    }
}

std::string to_json(const HWitness& witness) {
    json intervals = json::array();
    for (const Interval& piece : witness.intervals)
        intervals.push_back(json{{"left", out(piece.left)}, {"right", out(piece.right)}});
    return json{{"f", step_to_value(witness.f)},
                {"intervals", intervals},
                {"weights", numbers(witness.weights)}}
        .dump();
}

HWitness witness_from_json(const std::string& text) {
    const json j = parse(text);
    if (!j.is_object() || !j.contains("f") || !j.contains("intervals"))
        throw ConfigInvalid("witness payload needs f, intervals, weights");
    HWitness w;
    w.f = step_from_value(j["f"]);
    if (!j["intervals"].is_array()) throw ConfigInvalid("witness intervals must be an array");
    try {
        for (const auto& e : j["intervals"])
            w.intervals.emplace_back(read_number(e, "left"), read_number(e, "right"));
    } catch (const ConfigInvalid&) {
        throw;
    } catch (const Error& e) {
        throw ConfigInvalid(std::string("invalid witness interval: ") + e.what());
    }
    w.weights = read_numbers(j, "weights");
    if (w.weights.size() != w.intervals.size())
        throw ConfigInvalid("witness weights must match intervals");
    return w;
}

}  // namespace rinorm
