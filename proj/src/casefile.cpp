#include "genusbound/casefile.hpp"

#include <algorithm>
#include <ostream>
#include <random>
#include <sstream>

#include "genusbound/oracle.hpp"

namespace genusbound {

const char* query_kind_name(QueryKind q) {
    switch (q) {
        case QueryKind::genus_bound: return "genus_bound";
        case QueryKind::max_insertion_degree: return "max_insertion_degree";
        case QueryKind::blowup: return "blowup";
        case QueryKind::l_invariant: return "l_invariant";
        case QueryKind::complete_primitive: return "complete_primitive";
    }
    return "?";
}

namespace {

constexpr long kMaxStructural = 1'000'000;  // genus, b1, r, degree caps

struct Ctx {
    const ParseOptions& opts;
    std::vector<FieldError>& errors;

    void err(std::string path, std::string rule, std::string message) {
        errors.push_back({std::move(path), std::move(rule), std::move(message)});
    }
};

void check_keys(Ctx& ctx, const Json& obj, const std::string& path,
                std::initializer_list<const char*> allowed) {
    if (!ctx.opts.strict_fields) return;
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const char* k : allowed) {
            if (item.key() == k) {
                known = true;
                break;
            }
        }
        if (!known) {
            ctx.err(path + "/" + item.key(), "unknown_field",
                    "unknown field '" + item.key() + "'");
        }
    }
}

std::optional<Int> read_int(Ctx& ctx, const Json& j, const std::string& path) {
    if (j.is_number_float()) {
        ctx.err(path, "type", "floating point is not accepted; use an integer or a string");
        return std::nullopt;
    }
    if (j.is_number_unsigned()) return Int(std::to_string(j.get<std::uint64_t>()));
    if (j.is_number_integer()) return Int(std::to_string(j.get<std::int64_t>()));
    if (j.is_string()) {
        try {
            return parse_integer(j.get<std::string>());
        } catch (const InputError& e) {
            ctx.err(path, "type", e.what());
            return std::nullopt;
        }
    }
    ctx.err(path, "type", "expected an integer");
    return std::nullopt;
}

std::optional<long> read_small(Ctx& ctx, const Json& j, const std::string& path,
                                    long lo, long hi = kMaxStructural) {
    auto v = read_int(ctx, j, path);
    if (!v) return std::nullopt;
    if (*v < lo || *v > hi) {
        ctx.err(path, "value",
                "expected a value in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
        return std::nullopt;
    }
    return static_cast<long>(v->get_si());
}

std::optional<Rat> read_rat(Ctx& ctx, const Json& j, const std::string& path) {
    if (j.is_number_float()) {
        ctx.err(path, "type", "floating point is not accepted; use \"p/q\" strings");
        return std::nullopt;
    }
    if (j.is_number_unsigned()) return Rat(Int(std::to_string(j.get<std::uint64_t>())));
    if (j.is_number_integer()) return Rat(Int(std::to_string(j.get<std::int64_t>())));
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const InputError& e) {
            ctx.err(path, "type", e.what());
            return std::nullopt;
        }
    }
    ctx.err(path, "type", "expected an integer or a \"p/q\" string");
    return std::nullopt;
}

std::optional<bool> read_bool(Ctx& ctx, const Json& j, const std::string& path) {
    if (j.is_boolean()) return j.get<bool>();
    ctx.err(path, "type", "expected a boolean");
    return std::nullopt;
}

std::optional<ManifoldData> parse_manifold(Ctx& ctx, const Json& j, const std::string& path) {
    if (!j.is_object()) {
        ctx.err(path, "type", "expected an object");
        return std::nullopt;
    }
    check_keys(ctx, j, path, {"b1", "b2_plus", "chi", "tau"});
    ManifoldData m;
    if (j.contains("b1")) {
        if (auto v = read_small(ctx, j["b1"], path + "/b1", 0)) m.b1 = *v;
    } else {
        ctx.err(path + "/b1", "missing_field", "b1 is required");
    }
    if (j.contains("b2_plus")) {
        if (auto v = read_small(ctx, j["b2_plus"], path + "/b2_plus", 1)) m.b2_plus = *v;
    } else {
        ctx.err(path + "/b2_plus", "missing_field", "b2_plus is required");
    }
    if (j.contains("chi")) m.chi = read_int(ctx, j["chi"], path + "/chi");
    if (j.contains("tau")) m.tau = read_int(ctx, j["tau"], path + "/tau");
    return m;
}

std::optional<SurfaceData> parse_surface(Ctx& ctx, const Json& j, const std::string& path,
                                         std::optional<IntVec>& a_vector) {
    if (!j.is_object()) {
        ctx.err(path, "type", "expected an object");
        return std::nullopt;
    }
    check_keys(ctx, j, path,
               {"genus", "self_intersection", "non_torsion", "embedding", "a_vector"});
    SurfaceData s;
    if (j.contains("genus")) {
        if (auto v = read_small(ctx, j["genus"], path + "/genus", 1)) {
            s.genus = static_cast<int>(*v);
        }
    } else {
        ctx.err(path + "/genus", "missing_field", "genus is required");
    }
    if (j.contains("self_intersection")) {
        if (auto v = read_int(ctx, j["self_intersection"], path + "/self_intersection")) {
            s.self_int = *v;
        }
    }
    if (j.contains("non_torsion")) {
        if (auto v = read_bool(ctx, j["non_torsion"], path + "/non_torsion")) s.non_torsion = *v;
    }
    if (j.contains("embedding")) {
        const Json& em = j["embedding"];
        if (!em.is_array()) {
            ctx.err(path + "/embedding", "type", "expected an array of rows");
        } else {
            RatMatrix matrix;
            for (std::size_t r = 0; r < em.size(); ++r) {
                const std::string rpath = path + "/embedding/" + std::to_string(r);
                if (!em[r].is_array()) {
                    ctx.err(rpath, "type", "expected a row array");
                    continue;
                }
                RatVec row;
                for (std::size_t c = 0; c < em[r].size(); ++c) {
                    if (auto q = read_rat(ctx, em[r][c], rpath + "/" + std::to_string(c))) {
                        row.push_back(*q);
                    }
                }
                matrix.push_back(std::move(row));
            }
            EmbeddingMap e;
            e.genus = s.genus;
            e.ambient_b1 = static_cast<int>(matrix.size());
            e.matrix = std::move(matrix);
            s.embedding = std::move(e);
        }
    }
    if (j.contains("a_vector")) {
        const Json& av = j["a_vector"];
        if (!av.is_array()) {
            ctx.err(path + "/a_vector", "type", "expected an array of integers");
        } else {
            IntVec v;
            for (std::size_t c = 0; c < av.size(); ++c) {
                if (auto x = read_int(ctx, av[c], path + "/a_vector/" + std::to_string(c))) {
                    v.push_back(*x);
                }
            }
            a_vector = std::move(v);
        }
    }
    return s;
}

std::optional<SpinCEntry> parse_spinc_entry(Ctx& ctx, const Json& j, const std::string& path) {
    if (!j.is_object()) {
        ctx.err(path, "type", "expected an object");
        return std::nullopt;
    }
    check_keys(ctx, j, path, {"name", "c1_square", "pairing_e", "d_s", "sw", "chamber"});
    SpinCEntry entry;
    if (j.contains("name") && j["name"].is_string()) {
        entry.data.name = j["name"].get<std::string>();
    } else {
        ctx.err(path + "/name", j.contains("name") ? "type" : "missing_field",
                "every spinc entry needs a string name");
    }
    if (j.contains("c1_square")) {
        entry.data.c1_square = read_int(ctx, j["c1_square"], path + "/c1_square");
    }
    if (j.contains("pairing_e")) {
        entry.data.pairing_e = read_int(ctx, j["pairing_e"], path + "/pairing_e");
    }
    if (j.contains("d_s")) entry.d_s = read_int(ctx, j["d_s"], path + "/d_s");
    if (j.contains("sw")) {
        const Json& sw = j["sw"];
        if (!sw.is_object()) {
            ctx.err(path + "/sw", "type", "expected an object");
        } else {
            check_keys(ctx, sw, path + "/sw",
                       {"nonvanishing", "u_power", "surface_one_dim_count", "ambient_degree"});
            if (sw.contains("nonvanishing")) {
                if (auto v = read_bool(ctx, sw["nonvanishing"], path + "/sw/nonvanishing")) {
                    entry.data.sw_nonvanishing = *v;
                }
            } else {
                ctx.err(path + "/sw/nonvanishing", "missing_field", "nonvanishing is required");
            }
            if (sw.contains("u_power")) {
                if (auto v = read_small(ctx, sw["u_power"], path + "/sw/u_power", 0)) {
                    entry.insertion.u_power = *v;
                }
            }
            if (sw.contains("surface_one_dim_count")) {
                if (auto v = read_small(ctx, sw["surface_one_dim_count"],
                                        path + "/sw/surface_one_dim_count", 0)) {
                    entry.insertion.surface_one_dim_count = *v;
                }
            }
            if (sw.contains("ambient_degree")) {
                if (auto v = read_small(ctx, sw["ambient_degree"], path + "/sw/ambient_degree", 0)) {
                    entry.insertion.ambient_degree = *v;
                }
            }
        }
    }
    if (j.contains("chamber")) {
        const std::string cpath = path + "/chamber";
        if (!j["chamber"].is_string()) {
            ctx.err(cpath, "type", "expected \"pd_sigma\" or \"not_applicable\"");
        } else {
            const std::string v = j["chamber"].get<std::string>();
            if (v == "pd_sigma") {
                entry.data.chamber = Chamber::pd_sigma;
            } else if (v == "not_applicable") {
                entry.data.chamber = Chamber::not_applicable;
            } else {
                ctx.err(cpath, "value", "expected \"pd_sigma\" or \"not_applicable\"");
            }
        }
    }
    return entry;
}

// Cross-field semantic rules; only run when the structural pass succeeded.
void validate_semantics(Ctx& ctx, const CaseFile& c, const std::string& path) {
    const bool needs_engine = c.query == QueryKind::genus_bound ||
                              c.query == QueryKind::max_insertion_degree;
    auto require = [&](bool present, const std::string& where, const std::string& what) {
        if (!present) ctx.err(where, "missing_field", what + " is required for this query");
    };

    switch (c.query) {
        case QueryKind::genus_bound:
        case QueryKind::max_insertion_degree:
            require(c.manifold.has_value(), path + "/manifold", "manifold block");
            require(c.surface.has_value(), path + "/surface", "surface block");
            require(!c.spinc.empty(), path + "/spinc", "a nonempty spinc list");
            break;
        case QueryKind::blowup:
            require(c.manifold.has_value(), path + "/manifold", "manifold block");
            require(c.surface.has_value(), path + "/surface", "surface block");
            require(c.blowup.has_value(), path + "/blowup", "blowup block");
            break;
        case QueryKind::l_invariant:
            require(c.manifold.has_value(), path + "/manifold", "manifold block");
            require(c.surface.has_value(), path + "/surface", "surface block");
            if (c.surface && !c.surface->embedding && c.manifold && c.manifold->b1 != 0) {
                ctx.err(path + "/surface/embedding", "missing_field",
                        "an embedding matrix is required when b1 > 0");
            }
            break;
        case QueryKind::complete_primitive:
            require(c.surface.has_value(), path + "/surface", "surface block");
            if (c.surface && !c.a_vector) {
                ctx.err(path + "/surface/a_vector", "missing_field",
                        "a_vector is required for complete_primitive");
            }
            break;
    }
    if (!ctx.errors.empty()) return;

    for (std::size_t i = 0; i < c.spinc.size(); ++i) {
        const auto& entry = c.spinc[i];
        const std::string spath = path + "/spinc/" + std::to_string(i);
        if (needs_engine && !entry.data.pairing_e) {
            ctx.err(spath + "/pairing_e", "missing_field", "pairing_e is required for this query");
        }
        if (entry.data.pairing_e && c.surface &&
            !wu_parity_check(*entry.data.pairing_e, c.surface->self_int)) {
            ctx.err(spath + "/pairing_e", "wu_parity",
                    "|pairing_e| + self_intersection must be even");
        }
        if (c.manifold && c.manifold->b2_plus == 1 &&
            entry.data.chamber != Chamber::pd_sigma &&
            (needs_engine || c.query == QueryKind::blowup)) {
            ctx.err(spath + "/chamber", "chamber_required",
                    "b2_plus = 1 requires chamber \"pd_sigma\"");
        }
        if (entry.d_s && entry.data.c1_square && c.manifold && c.manifold->chi &&
            c.manifold->tau) {
            try {
                Int expect = d_invariant(*entry.data.c1_square, *c.manifold->chi, *c.manifold->tau);
                if (expect != *entry.d_s) {
                    ctx.err(spath + "/d_s", "d_mismatch",
                            "d_s = " + entry.d_s->get_str() + " but (c1^2 - 2chi - 3tau)/4 = " +
                                expect.get_str());
                }
            } catch (const InputError& e) {
                ctx.err(spath + "/c1_square", "d_inconsistent", e.what());
            }
        }
    }
    if (c.surface && c.surface->embedding) {
        const auto& e = *c.surface->embedding;
        for (std::size_t r = 0; r < e.matrix.size(); ++r) {
            if (static_cast<int>(e.matrix[r].size()) != 2 * c.surface->genus) {
                ctx.err(path + "/surface/embedding/" + std::to_string(r), "dimension",
                        "expected 2*genus = " + std::to_string(2 * c.surface->genus) +
                            " columns");
            }
        }
        if (c.manifold && e.ambient_b1 != c.manifold->b1) {
            ctx.err(path + "/surface/embedding", "dimension",
                    "expected b1 = " + std::to_string(c.manifold->b1) + " rows");
        }
    }
    if (c.a_vector && c.surface &&
        static_cast<int>(c.a_vector->size()) != c.surface->genus) {
        ctx.err(path + "/surface/a_vector", "dimension", "expected genus entries");
    }
}

std::optional<CaseFile> parse_one(Ctx& ctx, const Json& j, const std::string& path) {
    if (!j.is_object()) {
        ctx.err(path.empty() ? "/" : path, "type", "expected a case object");
        return std::nullopt;
    }
    check_keys(ctx, j, path, {"query", "manifold", "surface", "spinc", "blowup"});
    CaseFile c;
    if (!j.contains("query") || !j["query"].is_string()) {
        ctx.err(path + "/query", "missing_field", "query is required");
        return std::nullopt;
    }
    const std::string q = j["query"].get<std::string>();
    if (q == "genus_bound") {
        c.query = QueryKind::genus_bound;
    } else if (q == "max_insertion_degree") {
        c.query = QueryKind::max_insertion_degree;
    } else if (q == "blowup") {
        c.query = QueryKind::blowup;
    } else if (q == "l_invariant") {
        c.query = QueryKind::l_invariant;
    } else if (q == "complete_primitive") {
        c.query = QueryKind::complete_primitive;
    } else {
        ctx.err(path + "/query", "value", "unknown query '" + q + "'");
        return std::nullopt;
    }
    if (j.contains("manifold")) c.manifold = parse_manifold(ctx, j["manifold"], path + "/manifold");
    if (j.contains("surface")) {
        c.surface = parse_surface(ctx, j["surface"], path + "/surface", c.a_vector);
    }
    if (j.contains("spinc")) {
        if (!j["spinc"].is_array()) {
            ctx.err(path + "/spinc", "type", "expected an array");
        } else {
            for (std::size_t i = 0; i < j["spinc"].size(); ++i) {
                if (auto entry =
                        parse_spinc_entry(ctx, j["spinc"][i], path + "/spinc/" + std::to_string(i))) {
                    c.spinc.push_back(std::move(*entry));
                }
            }
        }
    }
    if (j.contains("blowup")) {
        const Json& b = j["blowup"];
        if (!b.is_object()) {
            ctx.err(path + "/blowup", "type", "expected an object");
        } else {
            check_keys(ctx, b, path + "/blowup", {"r"});
            BlowUpSpec spec;
            if (b.contains("r")) {
                if (auto v = read_small(ctx, b["r"], path + "/blowup/r", 0)) spec.r = *v;
            } else {
                ctx.err(path + "/blowup/r", "missing_field", "r is required");
            }
            c.blowup = spec;
        }
    }
    validate_semantics(ctx, c, path);
    return c;
}

}  // namespace

ParseResult parse_cases(const std::string& text, const ParseOptions& opts) {
    ParseResult result;
    Json doc = Json::parse(text, nullptr, false);
    if (doc.is_discarded()) {
        result.errors.push_back({"/", "json", "input is not valid JSON"});
        return result;
    }
    Ctx ctx{opts, result.errors};
    if (doc.is_array()) {
        result.batch = true;
        for (std::size_t i = 0; i < doc.size(); ++i) {
            if (auto c = parse_one(ctx, doc[i], "/" + std::to_string(i))) {
                result.cases.push_back(std::move(*c));
            }
        }
    } else {
        if (auto c = parse_one(ctx, doc, "")) result.cases.push_back(std::move(*c));
    }
    if (!result.errors.empty()) result.cases.clear();
    return result;
}

namespace {

Json json_int(const Int& v) {
    if (v.fits_slong_p()) return Json(v.get_si());
    return Json(v.get_str());
}

Json json_opt_int(const std::optional<Int>& v) {
    return v ? json_int(*v) : Json(nullptr);
}

Json serialize_spinc_entry(const SpinCEntry& e) {
    Json j = Json::object();
    j["name"] = e.data.name;
    if (e.data.c1_square) j["c1_square"] = json_int(*e.data.c1_square);
    if (e.data.pairing_e) j["pairing_e"] = json_int(*e.data.pairing_e);
    if (e.d_s) j["d_s"] = json_int(*e.d_s);
    j["sw"] = Json{{"nonvanishing", e.data.sw_nonvanishing},
                   {"u_power", e.insertion.u_power},
                   {"surface_one_dim_count", e.insertion.surface_one_dim_count},
                   {"ambient_degree", e.insertion.ambient_degree}};
    j["chamber"] = chamber_name(e.data.chamber);
    return j;
}

}  // namespace

Json serialize_case(const CaseFile& c) {
    Json j = Json::object();
    j["query"] = query_kind_name(c.query);
    if (c.manifold) {
        Json m = Json::object();
        m["b1"] = c.manifold->b1;
        m["b2_plus"] = c.manifold->b2_plus;
        if (c.manifold->chi) m["chi"] = json_int(*c.manifold->chi);
        if (c.manifold->tau) m["tau"] = json_int(*c.manifold->tau);
        j["manifold"] = std::move(m);
    }
    if (c.surface) {
        Json s = Json::object();
        s["genus"] = c.surface->genus;
        s["self_intersection"] = json_int(c.surface->self_int);
        s["non_torsion"] = c.surface->non_torsion;
        if (c.surface->embedding) {
            Json rows = Json::array();
            for (const auto& row : c.surface->embedding->matrix) {
                Json jrow = Json::array();
                for (const auto& q : row) jrow.push_back(format_rational(q));
                rows.push_back(std::move(jrow));
            }
            s["embedding"] = std::move(rows);
        }
        if (c.a_vector) {
            Json av = Json::array();
            for (const auto& x : *c.a_vector) av.push_back(json_int(x));
            s["a_vector"] = std::move(av);
        }
        j["surface"] = std::move(s);
    }
    if (!c.spinc.empty()) {
        Json arr = Json::array();
        for (const auto& e : c.spinc) arr.push_back(serialize_spinc_entry(e));
        j["spinc"] = std::move(arr);
    }
    if (c.blowup) j["blowup"] = Json{{"r", c.blowup->r}};
    return j;
}

namespace {

std::optional<Int> resolve_d(const CaseFile& c, const SpinCEntry& entry) {
    if (entry.d_s) return entry.d_s;
    if (entry.data.c1_square && c.manifold && c.manifold->chi && c.manifold->tau) {
        return d_invariant(*entry.data.c1_square, *c.manifold->chi, *c.manifold->tau);
    }
    return std::nullopt;
}

Json verdict_json(const TheoremVerdict& v) {
    Json j = Json::object();
    j["theorem_id"] = theorem_id_name(v.id);
    j["applicable"] = v.applicable;
    j["failed_hypotheses"] = v.failed_hypotheses;
    j["genus_lower_bound"] = json_opt_int(v.genus_lower_bound);
    j["degree_cap"] = json_opt_int(v.degree_cap);
    return j;
}

AdjunctionCase make_case(const CaseFile& c, const SpinCEntry& entry) {
    AdjunctionCase ac;
    ac.manifold = *c.manifold;
    ac.surface = *c.surface;
    ac.spinc = entry.data;
    ac.insertion = entry.insertion;
    ac.d_s = resolve_d(c, entry);
    return ac;
}

void collect_warnings(const CaseFile& c, const RunOptions& opts, Json& report) {
    Json warnings = Json::array();
    if (c.manifold) {
        for (const auto& entry : c.spinc) {
            if (auto w = characteristic_warning(entry.data, *c.manifold)) {
                if (opts.strict_characteristic) throw InputError("characteristic: " + *w);
                warnings.push_back(*w);
            }
        }
    }
    report["warnings"] = std::move(warnings);
}

Json run_genus_bound(const CaseFile& c) {
    Json out = Json::object();
    Json per_spinc = Json::array();
    std::optional<Int> overall;
    for (const auto& entry : c.spinc) {
        AdjunctionCase ac = make_case(c, entry);
        BoundReport br = best_bound(ac);
        Json r = Json::object();
        r["name"] = entry.data.name;
        r["d_s"] = json_opt_int(ac.d_s);
        r["l_sigma"] = br.l_sigma ? Json(*br.l_sigma) : Json(nullptr);
        r["l_source"] = br.l_source;
        r["normalization_applied"] = br.normalization_applied;
        Json verdicts = Json::array();
        for (const auto& v : br.verdicts) verdicts.push_back(verdict_json(v));
        r["verdicts"] = std::move(verdicts);
        r["best_bound"] = json_opt_int(br.best_bound);
        per_spinc.push_back(std::move(r));
        if (br.best_bound && (!overall || *br.best_bound > *overall)) overall = br.best_bound;
    }
    out["spinc"] = std::move(per_spinc);
    out["best_bound"] = json_opt_int(overall);
    return out;
}

Json run_max_insertion_degree(const CaseFile& c) {
    Json out = Json::object();
    Json per_spinc = Json::array();
    for (const auto& entry : c.spinc) {
        AdjunctionCase ac = make_case(c, entry);
        validate_case(ac);
        TheoremVerdict v = max_insertion_degree(ac);
        Json r = Json::object();
        r["name"] = entry.data.name;
        r["applicable"] = v.applicable;
        r["failed_hypotheses"] = v.failed_hypotheses;
        r["degree_cap"] = json_opt_int(v.degree_cap);
        r["genus_lower_bound"] = json_opt_int(v.genus_lower_bound);
        per_spinc.push_back(std::move(r));
    }
    out["spinc"] = std::move(per_spinc);
    return out;
}

Json run_blowup(const CaseFile& c) {
    const BlowUpSpec spec = *c.blowup;
    CaseFile transformed;
    transformed.query = c.query;
    transformed.manifold = c.manifold;
    transformed.surface = c.surface;
    transformed.a_vector = c.a_vector;
    SpinCData probe;  // manifold/surface transform does not depend on the entry
    auto base = blow_up(*c.manifold, *c.surface, probe, std::nullopt, spec);
    transformed.manifold = base.manifold;
    transformed.surface = base.surface;
    for (const auto& entry : c.spinc) {
        auto one = blow_up(*c.manifold, *c.surface, entry.data, resolve_d(c, entry), spec);
        SpinCEntry te;
        te.data = one.spinc;
        te.insertion = entry.insertion;
        te.d_s = one.d;
        transformed.spinc.push_back(std::move(te));
    }
    Json echo = serialize_case(transformed);
    Json out = Json::object();
    out["manifold"] = echo["manifold"];
    out["surface"] = echo["surface"];
    out["spinc"] = echo.contains("spinc") ? echo["spinc"] : Json::array();
    return out;
}

Json run_l_invariant(const CaseFile& c) {
    EmbeddingMap e;
    if (c.surface->embedding) {
        e = *c.surface->embedding;
    } else {
        e.genus = c.surface->genus;
        e.ambient_b1 = 0;
    }
    const int l = l_invariant(e);
    ConstructiveL lc = l_lower_bound_constructive(e);
    if (lc.value > l) throw InternalError("constructive l exceeded the closed form");
    Json out = Json::object();
    out["l_invariant"] = l;
    out["l_constructive"] = lc.value;
    out["agree"] = lc.value == l;
    out["betti_floor"] =
        l_bound_from_betti(e.genus, std::min(e.ambient_b1, e.genus));
    Json witness = Json::array();
    for (const auto& v : lc.witness.vectors) {
        Json row = Json::array();
        for (const auto& x : v.coeffs) row.push_back(json_int(x));
        witness.push_back(std::move(row));
    }
    out["witness"] = std::move(witness);
    return out;
}

Json step_json(const BasisStep& step) {
    return std::visit(
        [](const auto& s) -> Json {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, AShearStep>) {
                return Json{{"kind", "a_shear"}, {"i", s.i},          {"j", s.j},
                            {"k", s.k},         {"r", json_int(s.r)}, {"s", json_int(s.s)}};
            } else if constexpr (std::is_same_v<T, PairCompletionStep>) {
                return Json{{"kind", "pair_completion"},
                            {"m", s.m},
                            {"n", s.n},
                            {"a_m", json_int(s.a_m)},
                            {"a_n", json_int(s.a_n)}};
            } else if constexpr (std::is_same_v<T, SignFlipStep>) {
                return Json{{"kind", "sign_flip"}, {"j", s.j}};
            } else {
                return Json{{"kind", "swap"}, {"i", s.i}, {"j", s.j}};
            }
        },
        step);
}

Json run_complete_primitive(const CaseFile& c) {
    PrimitiveAVector v{c.surface->genus, *c.a_vector};
    ReductionTrace trace = complete_primitive(v);
    try {
        replay(trace);
    } catch (const InputError& e) {
        throw InternalError(std::string("freshly built trace failed to replay: ") + e.what());
    }
    Json out = Json::object();
    out["slot"] = trace.slot;
    Json steps = Json::array();
    for (const auto& s : trace.steps) steps.push_back(step_json(s));
    out["steps"] = std::move(steps);
    Json basis = Json::array();
    for (const auto& vec : trace.final_basis.vectors) {
        Json row = Json::array();
        for (const auto& x : vec.coeffs) row.push_back(json_int(x));
        basis.push_back(std::move(row));
    }
    out["final_basis"] = std::move(basis);
    out["verified"] = true;
    return out;
}

}  // namespace

Json run_query(const CaseFile& c, const RunOptions& opts) {
    Json report = Json::object();
    report["query"] = query_kind_name(c.query);
    report["inputs"] = serialize_case(c);
    collect_warnings(c, opts, report);
    switch (c.query) {
        case QueryKind::genus_bound:
            report["results"] = run_genus_bound(c);
            break;
        case QueryKind::max_insertion_degree:
            report["results"] = run_max_insertion_degree(c);
            break;
        case QueryKind::blowup:
            report["results"] = run_blowup(c);
            break;
        case QueryKind::l_invariant:
            report["results"] = run_l_invariant(c);
            break;
        case QueryKind::complete_primitive:
            report["results"] = run_complete_primitive(c);
            break;
    }
    return report;
}

namespace {

std::string cell(const Json& j) {
    if (j.is_null()) return "-";
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}

}  // namespace

std::string render_table(const Json& report) {
    std::ostringstream os;
    const std::string query = report["query"].get<std::string>();
    os << "query: " << query << "\n";
    for (const auto& w : report["warnings"]) {
        os << "warning: " << w.get<std::string>() << "\n";
    }
    const Json& res = report["results"];
    if (query == "genus_bound") {
        for (const auto& sp : res["spinc"]) {
            os << "spinc " << sp["name"].get<std::string>() << " (d_s " << cell(sp["d_s"])
               << ", l " << cell(sp["l_sigma"]) << " from " << sp["l_source"].get<std::string>()
               << ")\n";
            os << "  rule              applicable  bound  failed hypotheses\n";
            for (const auto& v : sp["verdicts"]) {
                std::string id = v["theorem_id"].get<std::string>();
                id.resize(16, ' ');
                std::string app = v["applicable"].get<bool>() ? "yes" : "no";
                app.resize(10, ' ');
                std::string bound = cell(v["genus_lower_bound"]);
                bound.resize(5, ' ');
                std::string fails;
                for (const auto& f : v["failed_hypotheses"]) {
                    if (!fails.empty()) fails += "; ";
                    fails += f.get<std::string>();
                }
                os << "  " << id << "  " << app << "  " << bound << "  " << fails << "\n";
            }
            os << "  best bound: " << cell(sp["best_bound"]) << "\n";
        }
        os << "best bound over all spinc: " << cell(res["best_bound"]) << "\n";
    } else if (query == "max_insertion_degree") {
        os << "  spinc        applicable  degree cap  genus bound\n";
        for (const auto& sp : res["spinc"]) {
            std::string name = sp["name"].get<std::string>();
            name.resize(11, ' ');
            std::string app = sp["applicable"].get<bool>() ? "yes" : "no";
            app.resize(10, ' ');
            std::string capv = cell(sp["degree_cap"]);
            capv.resize(10, ' ');
            os << "  " << name << "  " << app << "  " << capv << "  "
               << cell(sp["genus_lower_bound"]) << "\n";
        }
    } else if (query == "blowup") {
        os << "transformed case:\n" << res.dump(2) << "\n";
    } else if (query == "l_invariant") {
        os << "l_invariant: " << cell(res["l_invariant"]) << "\n"
           << "l_constructive: " << cell(res["l_constructive"]) << "\n"
           << "betti floor: " << cell(res["betti_floor"]) << "\n"
           << "agree: " << (res["agree"].get<bool>() ? "yes" : "no") << "\n";
    } else if (query == "complete_primitive") {
        os << "slot: " << cell(res["slot"]) << ", steps: " << res["steps"].size() << "\n";
        for (const auto& s : res["steps"]) os << "  " << s.dump() << "\n";
    }
    return os.str();
}

bool run_self_check(std::uint64_t seed, std::ostream& out) {
    bool ok = true;
    auto line = [&](bool pass, const std::string& name, const std::string& detail) {
        out << (pass ? "[ok]   " : "[FAIL] ") << name << ": " << detail << "\n";
        ok = ok && pass;
    };
    std::mt19937_64 rng(seed);

    {  // random words keep bases symplectic (verified inside apply_word)
        int count = 0;
        bool pass = true;
        try {
            for (int i = 0; i < 200; ++i) {
                int g = 1 + static_cast<int>(rng() % 5);
                random_symplectic_basis(g, 12, rng());
                ++count;
            }
        } catch (const std::exception&) {
            pass = false;
        }
        line(pass, "random-symplectic-bases", std::to_string(count) + " draws verified");
    }
    {  // descent completes and replays
        int count = 0;
        bool pass = true;
        try {
            for (int i = 0; i < 100; ++i) {
                int g = 1 + static_cast<int>(rng() % 5);
                IntVec coeffs(g);
                Int gc = 0;
                do {
                    for (auto& x : coeffs) {
                        x = Int(static_cast<long>(rng() % 101)) - 50;
                    }
                    gc = 0;
                    for (const auto& x : coeffs) gc = gcd_int(gc, x);
                } while (gc == 0);
                for (auto& x : coeffs) x /= gc;
                auto trace = complete_primitive(PrimitiveAVector{g, coeffs});
                replay(trace);
                ++count;
            }
        } catch (const std::exception&) {
            pass = false;
        }
        line(pass, "gcd-descent-replay", std::to_string(count) + " completions replayed");
    }
    {  // three routes to l agree on small built-ins
        bool pass = true;
        std::string detail;
        try {
            std::vector<EmbeddingMap> maps;
            maps.push_back(EmbeddingMap{2, 1, RatMatrix{{0, 0, 1, 0}}});
            maps.push_back(EmbeddingMap{1, 2, RatMatrix{{1, 0}, {0, 1}}});
            maps.push_back(EmbeddingMap{1, 1, RatMatrix{{1, 0}}});
            maps.push_back(EmbeddingMap{2, 0, RatMatrix{}});
            for (const auto& e : maps) {
                int l = l_invariant(e);
                auto lc = l_lower_bound_constructive(e);
                auto ex = exhaustive_l(e, e.genus == 1 ? 4 : 3);
                if (lc.value != l || !ex.stabilized || ex.value != l) {
                    pass = false;
                    detail = "disagreement at a built-in map";
                }
            }
            if (pass) detail = std::to_string(maps.size()) + " maps, three routes each";
        } catch (const std::exception& ex) {
            pass = false;
            detail = ex.what();
        }
        line(pass, "l-three-way", detail);
    }
    {  // blow-up composition and parity
        bool pass = true;
        int count = 0;
        try {
            for (int i = 0; i < 200; ++i) {
                ManifoldData m{static_cast<long>(rng() % 4), 2, Int(4), Int(0)};
                SurfaceData s;
                s.genus = 1 + static_cast<int>(rng() % 4);
                s.self_int = Int(static_cast<long>(rng() % 9));
                SpinCData sp;
                sp.name = "t";
                sp.pairing_e = Int(static_cast<long>(rng() % 9)) - 4;
                if (!wu_parity_check(*sp.pairing_e, s.self_int)) *sp.pairing_e += 1;
                sp.c1_square = Int(static_cast<long>(rng() % 17)) - 8;
                long r1 = rng() % 4, r2 = rng() % 4;
                auto once = blow_up(m, s, sp, Int(6), BlowUpSpec{r1});
                auto twice = blow_up(once.manifold, once.surface, once.spinc, once.d,
                                     BlowUpSpec{r2});
                auto direct = blow_up(m, s, sp, Int(6), BlowUpSpec{r1 + r2});
                if (!(twice == direct)) pass = false;
                if (wu_parity_check(*sp.pairing_e, s.self_int) !=
                    wu_parity_check(*direct.spinc.pairing_e, direct.surface.self_int)) {
                    pass = false;
                }
                ++count;
            }
        } catch (const std::exception&) {
            pass = false;
        }
        line(pass, "blowup-algebra", std::to_string(count) + " compositions");
    }
    return ok;
}

}  // namespace genusbound
