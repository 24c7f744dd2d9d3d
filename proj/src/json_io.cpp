#include "fareykit/json_io.hpp"

#include "fareykit/error.hpp"

namespace fareykit::json_io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

const json& field(const json& j, const char* name) {
    if (!j.is_object()) {
        fail(std::string("expected an object holding ") + name);
    }
    auto it = j.find(name);
    if (it == j.end()) {
        fail(std::string("missing field ") + name);
    }
    return *it;
}

template <typename T>
T get(const json& j, const char* name) {
    try {
        return field(j, name).get<T>();
    } catch (const json::exception& e) {
        fail(std::string("field ") + name + ": " + e.what());
    }
}

const json& array(const json& j, const char* name) {
    const json& a = field(j, name);
    if (!a.is_array()) {
        fail(std::string("field ") + name + " must be an array");
    }
    return a;
}

std::string method_name(DistanceMethod m) { return m == DistanceMethod::Oracle ? "oracle" : "fast"; }

DistanceMethod parse_method(const std::string& s) {
    if (s == "oracle") {
        return DistanceMethod::Oracle;
    }
    if (s == "fast") {
        return DistanceMethod::Fast;
    }
    fail("unknown distance method " + s);
}

ViolationKind parse_violation_kind(const std::string& s) {
    for (auto k : {ViolationKind::LevelCongruence, ViolationKind::LevelOrder, ViolationKind::LeafRule,
                   ViolationKind::EdgeLabel, ViolationKind::ChildClass, ViolationKind::RootLevel,
                   ViolationKind::VolumeClass, ViolationKind::LabelArity}) {
        if (to_string(k) == s) {
            return k;
        }
    }
    fail("unknown violation kind " + s);
}

json encode_slopes(const std::vector<Slope>& v) {
    json out = json::array();
    for (const auto& s : v) {
        out.push_back(encode(s));
    }
    return out;
}

}  // namespace

json envelope(std::string_view command, json result) {
    return {{"schema", kSchema}, {"command", command}, {"result", std::move(result)}};
}

const json& unwrap(const json& doc, std::string_view command) {
    if (get<std::string>(doc, "schema") != kSchema) {
        fail("schema must be " + std::string(kSchema));
    }
    if (get<std::string>(doc, "command") != command) {
        fail("expected command " + std::string(command));
    }
    return field(doc, "result");
}

json encode(const Integer& v) {
    if (auto small = to_int64(v)) {
        return *small;
    }
    return to_string(v);
}

Integer decode_integer(const json& j) {
    if (j.is_number_integer()) {
        return j.is_number_unsigned() ? Integer(j.get<std::uint64_t>()) : Integer(j.get<std::int64_t>());
    }
    if (j.is_string()) {
        return parse_integer(j.get<std::string>());
    }
    fail("expected an integer, got " + j.dump());
}

json encode(const Slope& s) { return to_string(s); }

Slope decode_slope(const json& j) {
    if (!j.is_string()) {
        fail("expected a slope string, got " + j.dump());
    }
    return parse_slope(j.get<std::string>());
}

json encode(const SlopeSet& s) {
    json members = json::array();
    for (const auto& m : s.members) {
        members.push_back(encode(m));
    }
    return {{"members", members},
            {"certified_bound", s.certified_bound ? json(*s.certified_bound) : json(nullptr)}};
}

SlopeSet decode_slope_set(const json& j) {
    SlopeSet out;
    for (const auto& m : array(j, "members")) {
        out.members.insert(decode_slope(m));
    }
    const json& bound = field(j, "certified_bound");
    if (!bound.is_null()) {
        out.certified_bound = get<std::uint64_t>(j, "certified_bound");
    }
    return out;
}

json encode(const DistanceResult& r) {
    return {{"value", r.value}, {"method", method_name(r.method)}, {"stable", r.stable}, {"entry_bound", r.entry_bound}};
}

DistanceResult decode_distance(const json& j) {
    DistanceResult r;
    r.value = get<std::uint64_t>(j, "value");
    r.method = parse_method(get<std::string>(j, "method"));
    r.stable = get<bool>(j, "stable");
    r.entry_bound = get<std::int64_t>(j, "entry_bound");
    return r;
}

json encode(const GeodesicPath& p) { return {{"length", p.length()}, {"vertices", encode_slopes(p.vertices)}}; }

GeodesicPath decode_path(const json& j) {
    GeodesicPath p;
    for (const auto& v : array(j, "vertices")) {
        p.vertices.push_back(decode_slope(v));
    }
    if (get<std::size_t>(j, "length") != p.length()) {
        fail("path length does not match its vertices");
    }
    return p;
}

json encode(const PairAudit& p) {
    return {{"upstairs", {encode(p.upstairs_a), encode(p.upstairs_b)}},
            {"downstairs", {encode(p.downstairs_a), encode(p.downstairs_b)}},
            {"upstairs_distance", p.upstairs_distance},
            {"downstairs_distance", p.downstairs_distance},
            {"stable", p.stable}};
}

PairAudit decode_pair_audit(const json& j) {
    const json& up = array(j, "upstairs");
    const json& down = array(j, "downstairs");
    if (up.size() != 2 || down.size() != 2) {
        fail("audited pairs hold two slopes");
    }
    return PairAudit{decode_slope(up[0]),
                     decode_slope(up[1]),
                     decode_slope(down[0]),
                     decode_slope(down[1]),
                     get<std::uint64_t>(j, "upstairs_distance"),
                     get<std::uint64_t>(j, "downstairs_distance"),
                     get<bool>(j, "stable")};
}

json encode(const LipschitzAudit& a) {
    json violations = json::array(), extremal = json::array();
    for (const auto& p : a.violations) {
        violations.push_back(encode(p));
    }
    for (const auto& p : a.extremal) {
        extremal.push_back(encode(p));
    }
    return {{"degree", encode(a.degree)},
            {"constant", a.constant},
            {"max_forward_ratio", a.max_forward_ratio},
            {"max_backward_ratio", a.max_backward_ratio},
            {"forward_within_bound", a.forward_within_bound},
            {"backward_within_bound", a.backward_within_bound},
            {"all_stable", a.all_stable},
            {"pairs_checked", a.pairs_checked},
            {"violations", violations},
            {"extremal", extremal}};
}

LipschitzAudit decode_lipschitz_audit(const json& j) {
    LipschitzAudit a;
    a.degree = decode_integer(field(j, "degree"));
    a.constant = get<double>(j, "constant");
    a.max_forward_ratio = get<double>(j, "max_forward_ratio");
    a.max_backward_ratio = get<double>(j, "max_backward_ratio");
    a.forward_within_bound = get<bool>(j, "forward_within_bound");
    a.backward_within_bound = get<bool>(j, "backward_within_bound");
    a.all_stable = get<bool>(j, "all_stable");
    a.pairs_checked = get<std::size_t>(j, "pairs_checked");
    for (const auto& p : array(j, "violations")) {
        a.violations.push_back(decode_pair_audit(p));
    }
    for (const auto& p : array(j, "extremal")) {
        a.extremal.push_back(decode_pair_audit(p));
    }
    return a;
}

json encode(const ClosureDerivation& d) {
    json steps = json::array();
    for (const auto& s : d.steps) {
        json step = {{"rule", to_string(s.rule)}};
        switch (s.rule) {
        case ClosureRule::Subset:
        case ClosureRule::Union: step["operand"] = encode(s.operand); break;
        case ClosureRule::TwistOrbit:
            step["alpha"] = s.alpha ? encode(*s.alpha) : json(nullptr);
            step["range"] = s.range ? json::array({s.range->first, s.range->last}) : json(nullptr);
            break;
        case ClosureRule::DeltaNeighborhood:
            step["c"] = s.c ? json(*s.c) : json(nullptr);
            step["entry_bound"] = s.entry_bound ? encode(*s.entry_bound) : json(nullptr);
            break;
        }
        step["result"] = encode(s.result);
        steps.push_back(std::move(step));
    }
    return {{"seed", encode(d.seed)}, {"steps", steps}};
}

ClosureDerivation decode_derivation(const json& j) {
    ClosureDerivation d{decode_slope(field(j, "seed")), {}};
    for (const auto& s : array(j, "steps")) {
        ClosureStep step;
        try {
            step.rule = parse_closure_rule(get<std::string>(s, "rule"));
        } catch (const Error& e) {
            fail(std::string("steps.rule: ") + e.what());
        }
        switch (step.rule) {
        case ClosureRule::Subset:
        case ClosureRule::Union: step.operand = decode_slope_set(field(s, "operand")); break;
        case ClosureRule::TwistOrbit: {
            if (!field(s, "alpha").is_null()) {
                step.alpha = decode_slope(field(s, "alpha"));
            }
            const json& r = field(s, "range");
            if (!r.is_null()) {
                if (!r.is_array() || r.size() != 2) {
                    fail("steps.range must be [first, last]");
                }
                step.range = TwistRange{r[0].get<long long>(), r[1].get<long long>()};
            }
            break;
        }
        case ClosureRule::DeltaNeighborhood:
            if (!field(s, "c").is_null()) {
                step.c = get<std::uint64_t>(s, "c");
            }
            if (!field(s, "entry_bound").is_null()) {
                step.entry_bound = decode_integer(field(s, "entry_bound"));
            }
            break;
        }
        step.result = decode_slope_set(field(s, "result"));
        d.steps.push_back(std::move(step));
    }
    return d;
}

json encode(const Multislope& m) { return to_string(m); }

Multislope decode_multislope(const json& j) {
    if (!j.is_string()) {
        fail("expected a multislope string, got " + j.dump());
    }
    return parse_multislope(j.get<std::string>());
}

json encode(const MnhReport& r) {
    json mnh = json::array(), rejected = json::array();
    for (const auto& m : r.mnh) {
        mnh.push_back(encode(m));
    }
    for (const auto& x : r.rejected) {
        rejected.push_back({{"candidate", encode(x.candidate)}, {"witness", encode(x.witness)}});
    }
    return {{"mnh", mnh}, {"rejected", rejected}};
}

MnhReport decode_mnh_report(const json& j) {
    MnhReport r;
    for (const auto& m : array(j, "mnh")) {
        r.mnh.push_back(decode_multislope(m));
    }
    for (const auto& x : array(j, "rejected")) {
        r.rejected.push_back({decode_multislope(field(x, "candidate")), decode_multislope(field(x, "witness"))});
    }
    return r;
}

json encode(const ValidationReport& r) {
    json violations = json::array();
    for (const auto& v : r.violations) {
        violations.push_back({{"kind", to_string(v.kind)}, {"node", v.node}, {"message", v.message}});
    }
    return {{"ok", r.ok()}, {"violations", violations}};
}

ValidationReport decode_validation_report(const json& j) {
    ValidationReport r;
    for (const auto& v : array(j, "violations")) {
        r.violations.push_back(
            {parse_violation_kind(get<std::string>(v, "kind")), get<std::string>(v, "node"), get<std::string>(v, "message")});
    }
    if (get<bool>(j, "ok") != r.ok()) {
        fail("ok disagrees with the violation list");
    }
    return r;
}

json encode(const VolumeChainReport& r) {
    json violations = json::array();
    for (const auto& v : r.violations) {
        violations.push_back({{"ancestor", v.ancestor},
                              {"descendant", v.descendant},
                              {"ancestor_volume", format_rational(v.ancestor_volume)},
                              {"descendant_volume", format_rational(v.descendant_volume)}});
    }
    return {{"ok", r.ok()}, {"pairs_checked", r.pairs_checked}, {"violations", violations}};
}

VolumeChainReport decode_volume_chain(const json& j) {
    VolumeChainReport r;
    r.pairs_checked = get<std::size_t>(j, "pairs_checked");
    for (const auto& v : array(j, "violations")) {
        r.violations.push_back({get<std::string>(v, "ancestor"), get<std::string>(v, "descendant"),
                                parse_rational(get<std::string>(v, "ancestor_volume")),
                                parse_rational(get<std::string>(v, "descendant_volume"))});
    }
    if (get<bool>(j, "ok") != r.ok()) {
        fail("ok disagrees with the violation list");
    }
    return r;
}

}  // namespace fareykit::json_io
