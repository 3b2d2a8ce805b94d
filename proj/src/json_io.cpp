#include "glho/json_io.hpp"

namespace glho {

namespace {

json wrapped(const json& j) { return j; }

template <typename T>
T get_checked(const json& j, const char* field) {
    if (!j.contains(field)) {
        throw ParseError(std::string("missing JSON field \"") + field + "\"");
    }
    try {
        return j.at(field).get<T>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad JSON field \"") + field + "\": " + e.what());
    }
}

}  // namespace

json to_json(const Weight& w) {
    return json{{"m", w.m}, {"n", w.n}, {"rows", w.rows}};
}

Weight weight_from_json(const json& j) {
    return Weight::make(get_checked<int>(j, "m"), get_checked<int>(j, "n"),
                        get_checked<std::vector<std::int64_t>>(j, "rows"));
}

json to_json(const BlockKey& key) {
    return json{{"core", std::vector<std::int64_t>(key.core.begin(), key.core.end())},
                {"base", key.base}};
}

BlockKey block_key_from_json(const json& j) {
    auto core = get_checked<std::vector<std::int64_t>>(j, "core");
    return BlockKey::make(std::set<std::int64_t>(core.begin(), core.end()),
                          get_checked<std::int64_t>(j, "base"));
}

json to_json(const BlockObject& x) {
    json arr = json::array();
    for (const auto& [s, mult] : x.summands) {
        const char* kind = s.kind == IndecKind::P   ? "P"
                           : s.kind == IndecKind::B ? "B"
                           : s.simple()             ? "L"
                                                    : "R";
        for (std::int64_t c = 0; c < mult; ++c) {
            arr.push_back(json{{"kind", kind}, {"a", s.a}, {"b", s.b}});
        }
    }
    return wrapped(arr);
}

BlockObject block_object_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("block object JSON must be an array");
    BlockObject out;
    for (const auto& rec : j) {
        std::string kind = get_checked<std::string>(rec, "kind");
        std::int64_t a = get_checked<std::int64_t>(rec, "a");
        std::int64_t b = rec.contains("b") ? get_checked<std::int64_t>(rec, "b") : a;
        if (kind == "R") {
            out.add(Indec::R(a, b));
        } else if (kind == "B") {
            out.add(Indec::B(a, b));
        } else if (kind == "P") {
            out.add(Indec::P(a));
        } else if (kind == "L") {
            out.add(Indec::L(a));
        } else {
            throw ParseError("unknown summand kind \"" + kind + "\"");
        }
    }
    return out;
}

json to_json(const HoObject& x) {
    json arr = json::array();
    for (const auto& [s, mult] : x.summands) {
        for (std::int64_t c = 0; c < mult; ++c) {
            arr.push_back(json{{"kind", s.even_r ? "EvenR" : "S"}, {"a", s.a}, {"b", s.b}});
        }
    }
    return wrapped(arr);
}

HoObject ho_object_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("homotopy object JSON must be an array");
    HoObject out;
    for (const auto& rec : j) {
        std::string kind = get_checked<std::string>(rec, "kind");
        std::int64_t a = get_checked<std::int64_t>(rec, "a");
        if (kind == "S") {
            out.add(HoSummand::S(a));
        } else if (kind == "EvenR") {
            out.add(HoSummand::EvenR(a, get_checked<std::int64_t>(rec, "b")));
        } else {
            throw ParseError("unknown summand kind \"" + kind + "\"");
        }
    }
    return out;
}

json to_json(const HoMorphism& f) {
    json arr = json::array();
    for (const auto& e : f.entries) {
        arr.push_back(json{{"i", f.dst.at(e.dst_slot)},
                           {"j", f.src.at(e.src_slot)},
                           {"coeff", e.coeff},
                           {"src_slot", e.src_slot},
                           {"dst_slot", e.dst_slot}});
    }
    return json{{"src", f.src}, {"dst", f.dst}, {"arrows", arr}};
}

HoMorphism ho_morphism_from_json(const json& j) {
    HoMorphism f;
    f.src = get_checked<std::vector<std::int64_t>>(j, "src");
    f.dst = get_checked<std::vector<std::int64_t>>(j, "dst");
    if (!j.contains("arrows") || !j.at("arrows").is_array()) {
        throw ParseError("morphism JSON needs an \"arrows\" array");
    }
    for (const auto& rec : j.at("arrows")) {
        HoMorphism::Entry e;
        e.src_slot = get_checked<std::size_t>(rec, "src_slot");
        e.dst_slot = get_checked<std::size_t>(rec, "dst_slot");
        e.coeff = get_checked<std::int64_t>(rec, "coeff");
        if (e.src_slot >= f.src.size() || e.dst_slot >= f.dst.size()) {
            throw ParseError("morphism arrow slot out of range");
        }
        std::int64_t from = f.src[e.src_slot];
        std::int64_t to = f.dst[e.dst_slot];
        if (from < to || (from - to) % 2 != 0) {
            throw ParseError("morphism arrow violates the existence rule");
        }
        f.entries.push_back(e);
    }
    return f;
}

namespace {

const char* variant_name(SeriesVariant v) {
    switch (v) {
        case SeriesVariant::kac_plus: return "kac_plus";
        case SeriesVariant::kac_minus: return "kac_minus";
        case SeriesVariant::simple: return "simple";
    }
    return "simple";
}

SeriesVariant variant_from_name(const std::string& name) {
    if (name == "kac_plus") return SeriesVariant::kac_plus;
    if (name == "kac_minus") return SeriesVariant::kac_minus;
    if (name == "simple") return SeriesVariant::simple;
    throw ParseError("unknown series variant \"" + name + "\"");
}

}  // namespace

json to_json(const KSeries& s) {
    json terms = json::array();
    for (const auto& [deg, labels] : s.terms) {
        for (const auto& [label, coeff] : labels) {
            terms.push_back(json{{"deg", deg}, {"label", label}, {"coeff", coeff}});
        }
    }
    json j{{"variant", variant_name(s.variant)},
           {"terms", terms},
           {"truncation", s.truncation},
           {"d_max", s.d_max}};
    if (s.key) j["key"] = to_json(*s.key);
    return j;
}

KSeries kseries_from_json(const json& j) {
    KSeries s;
    s.variant = variant_from_name(get_checked<std::string>(j, "variant"));
    if (j.contains("key")) s.key = block_key_from_json(j.at("key"));
    s.truncation = get_checked<std::int64_t>(j, "truncation");
    s.d_max = j.contains("d_max") ? get_checked<std::int64_t>(j, "d_max") : s.truncation;
    if (!j.contains("terms") || !j.at("terms").is_array()) {
        throw ParseError("series JSON needs a \"terms\" array");
    }
    for (const auto& rec : j.at("terms")) {
        s.add_term(get_checked<std::int64_t>(rec, "deg"), get_checked<std::int64_t>(rec, "label"),
                   get_checked<std::int64_t>(rec, "coeff"));
        s.d_max = std::max(s.d_max, get_checked<std::int64_t>(rec, "deg"));
    }
    return s;
}

json to_json(const Partition& p) { return json(p.parts); }

Partition partition_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("partition JSON must be an array of parts");
    return Partition::make(j.get<std::vector<int>>());
}

}  // namespace glho
