#include "g2k/serialization.hpp"

#include <stdexcept>

namespace g2k {

namespace {

json integer_json(const Integer& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

Integer integer_from_json(const json& j) {
    if (j.is_number_integer()) return Integer(j.get<long>());
    if (j.is_string()) return Integer(j.get<std::string>());
    throw std::invalid_argument("expected an integer, got " + j.dump());
}

template <typename F>
auto list_from(const json& j, F f) {
    if (!j.is_array()) throw std::invalid_argument("expected an array, got " + j.dump());
    std::vector<decltype(f(j))> out;
    for (const auto& x : j) out.push_back(f(x));
    return out;
}

}  // namespace

json to_json(const Rational& x) { return {{"num", integer_json(x.get_num())}, {"den", integer_json(x.get_den())}}; }

Rational rational_from_json(const json& j) {
    Rational r;
    if (j.is_number_integer()) r = Rational(Integer(j.get<long>()));
    else if (j.is_string()) r = Rational(j.get<std::string>());
    else if (j.is_object()) {
        Integer d = integer_from_json(j.at("den"));
        if (d == 0) throw std::invalid_argument("zero denominator");
        r = Rational(integer_from_json(j.at("num")), d);
    } else throw std::invalid_argument("expected a rational, got " + j.dump());
    r.canonicalize();
    return r;
}

json to_json(const QVec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

json to_json(const ZVec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(integer_json(x));
    return a;
}

json to_json(const QMat& m) {
    json a = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
    return a;
}

json to_json(const ZMat& m) {
    json a = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
    return a;
}

json to_json(const ImVec& v) { return to_json(v.vec()); }
json to_json(const Quat& q) { return to_json(q.vec()); }

QVec qvec_from_json(const json& j) { return list_from(j, rational_from_json); }
ZVec zvec_from_json(const json& j) { return list_from(j, integer_from_json); }

QMat qmat_from_json(const json& j) {
    auto rows = list_from(j, qvec_from_json);
    QMat m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols()) throw std::invalid_argument("ragged matrix");
        for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) = rows[i][k];
    }
    return m;
}

ZMat zmat_from_json(const json& j) {
    auto rows = list_from(j, zvec_from_json);
    ZMat m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols()) throw std::invalid_argument("ragged matrix");
        for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) = rows[i][k];
    }
    return m;
}

ImVec imvec_from_json(const json& j) {
    QVec v = qvec_from_json(j);
    if (v.size() != 3) throw std::invalid_argument("imaginary quaternion needs 3 entries");
    return ImVec::from(v);
}

Quat quat_from_json(const json& j) {
    QVec v = qvec_from_json(j);
    if (v.size() != 4) throw std::invalid_argument("quaternion needs 4 entries");
    return Quat::from(v);
}

json to_json(const BieberbachGroup& g) {
    json basis = json::array(), gens = json::array();
    for (const auto& b : g.lattice.basis) basis.push_back(to_json(b));
    for (const auto& x : g.generators) gens.push_back({{"rotation", to_json(x.rot)}, {"translation", to_json(x.trans)}});
    return {{"class", to_string(g.cls)}, {"lattice", basis}, {"generators", gens}};
}

BieberbachGroup bieberbach_from_json(const json& j) {
    BieberbachClass cls = bieberbach_class_from(j.at("class").get<std::string>());
    Lattice lat = Lattice::cubic();
    if (j.contains("lattice")) {
        if (j["lattice"].is_string()) {
            std::string t = j["lattice"];
            if (t == "hexagonal") lat = Lattice::hexagonal();
            else if (t != "cubic") throw std::invalid_argument("unknown lattice '" + t + "'");
        } else {
            auto b = list_from(j["lattice"], imvec_from_json);
            if (b.size() != 3) throw std::invalid_argument("lattice needs 3 basis vectors");
            lat.basis = {b[0], b[1], b[2]};
        }
    }
    std::optional<std::vector<AffineIsometry>> gens;
    if (j.contains("generators"))
        gens = list_from(j["generators"], [](const json& x) {
            return AffineIsometry{zmat_from_json(x.at("rotation")), qvec_from_json(x.at("translation"))};
        });
    return make_bieberbach(cls, lat, gens);
}

json to_json(const AffineZ& g) { return {{"matrix", to_json(g.R)}, {"translation", to_json(g.t)}}; }

AffineZ affine_from_json(const json& j) {
    AffineZ g{zmat_from_json(j.at("matrix")), qvec_from_json(j.at("translation"))};
    if (g.R.rows() != g.R.cols() || g.R.rows() != g.t.size()) throw std::invalid_argument("affine map dimensions disagree");
    if (!(g.R * g.R.transpose() == ZMat::identity(g.R.rows()))) throw std::invalid_argument("linear part is not orthogonal");
    return g.canonical();
}

json to_json(const CrystalGroupR7& g) {
    json gens = json::array();
    for (std::size_t i = 0; i < g.generators.size(); ++i) {
        json x = to_json(g.generators[i]);
        x["name"] = i < g.names.size() ? g.names[i] : "g" + std::to_string(i + 1);
        gens.push_back(x);
    }
    return {{"generators", gens}};
}

CrystalGroupR7 crystal_group_from_json(const json& j) {
    CrystalGroupR7 g;
    for (const auto& x : j.at("generators")) {
        g.generators.push_back(affine_from_json(x));
        if (g.generators.back().dim() != 7) throw std::invalid_argument("generators must act on T^7");
        g.names.push_back(x.value("name", "g" + std::to_string(g.generators.size())));
    }
    return g;
}

json to_json(const QuatMap& m) { return {{"left", to_json(m.left)}, {"right", to_json(m.right)}}; }
QuatMap quat_map_from_json(const json& j) { return {quat_from_json(j.at("left")), quat_from_json(j.at("right"))}; }

json to_json(const LocalComponentData& c) {
    json rho = json::array();
    for (const auto& r : c.rho) rho.push_back(r ? to_json(*r) : json(nullptr));
    return {{"id", c.id},        {"multiplicity", c.multiplicity}, {"gamma", c.gamma},
            {"ade", c.ade},      {"g_alpha", to_json(c.g_alpha)},  {"rho", rho},
            {"rho_xi_trivial", c.rho_xi_trivial}, {"monodromy", c.monodromy}};
}

LocalComponentData local_component_from_json(const json& j) {
    LocalComponentData c;
    c.id = j.at("id").get<std::string>();
    c.multiplicity = j.value("multiplicity", std::size_t{1});
    c.gamma = j.at("gamma").get<std::string>();
    c.ade = j.contains("ade") ? j["ade"].get<std::string>() : ade_of_gamma(c.gamma);
    c.g_alpha = bieberbach_from_json(j.at("g_alpha"));
    if (j.contains("rho"))
        for (const auto& r : j["rho"]) c.rho.push_back(r.is_null() ? std::nullopt : std::optional<QuatMap>(quat_map_from_json(r)));
    c.rho_xi_trivial = j.value("rho_xi_trivial", true);
    c.monodromy = j.value("monodromy", std::string("identity"));
    return c;
}

json to_json(const OrbifoldData& o) {
    json j{{"name", o.name}, {"partial", o.partial}};
    if (o.global) j["global"] = to_json(*o.global);
    json syms = json::array();
    for (const auto& s : o.symmetries) {
        json x = to_json(s.map);
        x["name"] = s.name;
        syms.push_back(x);
    }
    j["symmetries"] = syms;
    json comps = json::array();
    for (const auto& c : o.components) comps.push_back(to_json(c));
    j["components"] = comps;
    return j;
}

OrbifoldData orbifold_from_json(const json& j) {
    OrbifoldData o;
    o.name = j.value("name", std::string());
    o.partial = j.value("partial", !j.contains("global"));
    if (j.contains("global")) o.global = crystal_group_from_json(j["global"]);
    if (j.contains("symmetries"))
        for (const auto& s : j["symmetries"]) o.symmetries.push_back({s.at("name").get<std::string>(), affine_from_json(s)});
    if (j.contains("components") && !j["components"].empty()) {
        for (const auto& c : j["components"]) o.components.push_back(local_component_from_json(c));
    } else if (o.global) {
        o.components = local_components_from_global(*o.global);
    }
    return o;
}

json to_json(const ResolutionEntry& e) {
    json j{{"component", e.component}, {"mechanism", e.mechanism}, {"zeta", to_json(e.zeta)},
           {"xi_hat", to_json(e.xi_hat)}, {"xi", to_json(e.xi)}};
    if (e.weyl_lift) {
        json w = json::array();
        for (const auto& m : *e.weyl_lift) w.push_back(to_json(m));
        j["weyl_lift"] = w;
    }
    if (e.curve_roots) {
        json w = json::array();
        for (const auto& r : *e.curve_roots) w.push_back(to_json(r));
        j["curve_roots"] = w;
    }
    if (e.k) {
        j["k"] = {{"symmetry", e.k->symmetry}};
        if (e.k->kappa_hat) j["k"]["kappa_hat"] = to_json(*e.k->kappa_hat);
    }
    return j;
}

ResolutionEntry resolution_entry_from_json(const json& j) {
    ResolutionEntry e;
    e.component = j.at("component").get<std::string>();
    e.mechanism = j.value("mechanism", std::string("orbifold-fixed-points"));
    if (j.contains("charges")) e.zeta = from_charges(list_from(j["charges"], imvec_from_json));
    else e.zeta = qmat_from_json(j.at("zeta"));
    e.xi_hat = imvec_from_json(j.at("xi_hat"));
    e.xi = zvec_from_json(j.at("xi"));
    if (j.contains("weyl_lift")) e.weyl_lift = list_from(j["weyl_lift"], zmat_from_json);
    if (j.contains("curve_roots")) e.curve_roots = list_from(j["curve_roots"], zvec_from_json);
    if (j.contains("k")) {
        KData k;
        k.symmetry = j["k"].at("symmetry").get<std::string>();
        if (j["k"].contains("kappa_hat")) k.kappa_hat = quat_map_from_json(j["k"]["kappa_hat"]);
        e.k = k;
    }
    return e;
}

json to_json(const ResolutionChoice& r) {
    json a = json::array();
    for (const auto& e : r.entries) a.push_back(to_json(e));
    return {{"entries", a}};
}

ResolutionChoice resolution_from_json(const json& j) {
    ResolutionChoice r;
    for (const auto& e : j.at("entries")) r.entries.push_back(resolution_entry_from_json(e));
    return r;
}

Expectations expectations_from_json(const json& j) {
    Expectations x;
    if (j.contains("total")) x.total = j["total"].get<std::size_t>();
    if (j.contains("by_component"))
        for (const auto& [k, v] : j["by_component"].items()) x.by_component[k] = v.get<std::size_t>();
    if (j.contains("components")) x.components = j["components"].get<std::size_t>();
    if (j.contains("strata"))
        for (const auto& [k, v] : j["strata"].items()) x.strata[k] = v.get<std::size_t>();
    return x;
}

Fixture fixture_from_json(const json& j) {
    Fixture f;
    f.name = j.value("name", std::string());
    f.tag = j.value("tag", std::string());
    f.description = j.value("description", std::string());
    f.orbifold = orbifold_from_json(j.at("orbifold"));
    if (j.contains("resolution")) f.resolution = resolution_from_json(j["resolution"]);
    if (j.contains("expected")) f.expected = expectations_from_json(j["expected"]);
    return f;
}

// ---------------------------------------------------------------------------

json to_json(const TorsionCheck& t) {
    json j{{"torsion_free", t.torsion_free}};
    if (t.element) j["element"] = to_json(*t.element);
    if (t.witness) j["witness"] = to_json(*t.witness);
    return j;
}

json to_json(const BaseOrbifold& b) {
    json pts = json::array();
    for (const auto& p : b.singular_points) pts.push_back({{"point", to_json(p.point)}, {"isotropy", p.isotropy}});
    return {{"axis", to_json(b.axis)},
            {"completion", to_json(b.completion)},
            {"n_f", b.n_f},
            {"topology", b.topology},
            {"underlying_euler", b.underlying_euler},
            {"orbifold_euler", to_json(b.orbifold_euler())},
            {"isotropy_orders", b.isotropy_orders()},
            {"singular_points", pts}};
}

namespace {

json subtorus_json(const Subtorus& s) { return {{"directions", to_json(s.dirs)}, {"offset", to_json(s.offset)}, {"dim", s.dim()}}; }

}  // namespace

json to_json(const SingularComponent& c) {
    json lifts = json::array();
    for (const auto& l : c.lifts) lifts.push_back(subtorus_json(l));
    return {{"id", c.id},
            {"stratum", c.stratum},
            {"dim", c.dim()},
            {"isotropy", c.isotropy},
            {"locus", subtorus_json(c.locus)},
            {"representative", to_json(c.representative)},
            {"stabilizer_order", c.stabilizer.size()},
            {"lifts", lifts}};
}

json to_json(const SingularSet& s) {
    json comps = json::array();
    for (const auto& c : s.components) comps.push_back(to_json(c));
    return {{"components", comps}, {"component_count", s.components.size()}, {"lifted_count", s.lifted_count()}, {"flags", s.flags}};
}

json to_json(const LocalModel& m) {
    json tang = json::array();
    for (const auto& t : m.tangent_action) tang.push_back(to_json(t));
    return {{"gamma", m.gamma}, {"g_alpha", to_string(m.g_alpha)}, {"rho_trivial", m.rho_trivial}, {"rho", m.rho}, {"tangent_action", tang}};
}

json to_json(const ComponentAction& a) {
    json sw = json::array();
    for (const auto& [x, y] : a.swapped) sw.push_back({x, y});
    return {{"permutation", a.permutation},
            {"fixed", a.fixed},
            {"swapped", sw},
            {"lifted", {{"total", a.lifted_total}, {"fixed", a.lifted_fixed}, {"two_cycles", a.lifted_two_cycles}}}};
}

json to_json(const FixedLocusComponent& c) {
    json tuple = json::array(), walls = json::array();
    for (const auto& w : c.weyl_tuple) tuple.push_back(to_json(w));
    for (const auto& w : c.walls_containing) walls.push_back(to_json(w));
    json j{{"weyl_tuple", tuple}, {"dim", c.dim()}, {"basis", to_json(c.basis.transpose())}, {"walls_containing", walls},
           {"orbit_size", c.orbit_size}};
    j["witness"] = c.witness ? to_json(*c.witness) : json(nullptr);
    return j;
}

json to_json(const FixedLocus& f) {
    json comps = json::array();
    for (const auto& c : f.components) comps.push_back(to_json(c));
    return {{"components", comps}, {"component_count", f.components.size()}, {"wall_bound_orbits", f.wall_bound_orbits},
            {"tuples_examined", f.tuples_examined}};
}

json to_json(const CurveClass& c) {
    json j{{"root", to_json(c.root)}, {"direction", to_json(c.direction)}, {"genus", c.genus},
           {"simple_coordinates", to_json(c.simple_coordinates)}};
    j["charges"] = {c.charges.first, c.charges.second};
    return j;
}

json to_json(const CheckItem& i) {
    return {{"name", i.name}, {"ok", i.ok}, {"gating", i.gating}, {"evidence", i.evidence}};
}

json to_json(const AssociativeCertificate& c) {
    json items = json::array();
    for (const auto& i : c.checklist) items.push_back(to_json(i));
    return {{"component", c.component},
            {"multiplicity", c.multiplicity},
            {"mechanism", c.mechanism},
            {"gamma", c.gamma},
            {"xi", to_json(c.xi)},
            {"xi_hat", to_json(c.xi_hat)},
            {"length_squared", to_json(c.length_squared)},
            {"curve", c.curve ? to_json(*c.curve) : json(nullptr)},
            {"n_f", c.n_f},
            {"checklist", items},
            {"passed", c.passed()},
            {"guaranteed_count", c.guaranteed_count},
            {"total", c.total()},
            {"homology_tag", c.homology_tag}};
}

json to_json(const CountReport& r) {
    json certs = json::array();
    for (const auto& c : r.certificates) certs.push_back(to_json(c));
    return {{"certificates", certs}, {"guaranteed_total", r.total}, {"bound", "at least"}};
}

}  // namespace g2k
