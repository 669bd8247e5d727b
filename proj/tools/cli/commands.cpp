#include "commands.hpp"

#include "g2k/fueter_model.hpp"

#include <cmath>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

namespace g2k::cli {

namespace {

using Clock = std::chrono::steady_clock;

json echo_of(const RunConfig& c) {
    json j{{"fixtures", c.fixtures}, {"seed", c.seed}, {"csv", c.csv}};
    if (!c.orbifold.empty()) j["orbifold"] = c.orbifold;
    if (!c.resolution.empty()) j["resolution"] = c.resolution;
    if (c.command == "enumerate-bieberbach") j["height"] = c.height;
    if (c.command == "fixed-locus" && !c.ade.empty()) {
        j["ade"] = c.ade;
        j["rotations"] = c.rotations;
    }
    if (c.command == "fueter-demo") j["trials"] = c.trials;
    return j;
}

std::vector<LoadedFixture> load_all(const RunConfig& c, Report& rep) {
    std::vector<LoadedFixture> out;
    for (const auto& f : c.fixtures) {
        out.push_back(load_fixture(f, c.data_dir));
        rep.add_fixture(out.back());
    }
    return out;
}

json load_json_file(const std::string& given) {
    return parse_json(read_file(given), given);
}

std::string csv_line(const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) s += (i ? "," : "") + cells[i];
    return s + "\n";
}

std::string num(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

// --------------------------------------------------------------------------- count-associatives

void count_one(const std::string& label, const OrbifoldData& o, const ResolutionChoice& r, const Expectations& ex,
               Report& rep, std::string& csv) {
    auto t0 = Clock::now();
    CountReport cr = count_associatives(o, r);
    rep.time(label, Clock::now() - t0);

    json item = to_json(cr);
    std::map<std::string, std::size_t> per;
    for (const auto& c : cr.certificates) {
        per[c.component] += c.total();
        csv += csv_line({label, c.component, c.mechanism, c.homology_tag, std::to_string(c.guaranteed_count),
                         std::to_string(c.multiplicity), c.passed() ? "pass" : "fail"});
    }
    item["by_component"] = per;
    rep.results()[label] = item;

    if (ex.total) rep.expect(label + ".total", *ex.total, cr.total);
    for (const auto& [id, n] : ex.by_component) rep.expect(label + "." + id, n, per.count(id) ? per.at(id) : 0);
}

void count_associatives_cmd(const RunConfig& c, Report& rep, std::string& csv) {
    csv = csv_line({"source", "component", "mechanism", "homology_tag", "guaranteed", "multiplicity", "checklist"});
    if (c.fixtures.empty() && (c.orbifold.empty() || c.resolution.empty()))
        throw InputError("count-associatives needs --fixture, or --orbifold and --resolution");
    for (const auto& f : load_all(c, rep))
        count_one(f.fixture.tag.empty() ? f.path.stem().string() : f.fixture.tag, f.fixture.orbifold, f.fixture.resolution,
                  f.fixture.expected, rep, csv);
    if (!c.orbifold.empty() && !c.resolution.empty()) {
        json oj = load_json_file(c.orbifold), rj = load_json_file(c.resolution);
        rep.add_input(c.orbifold, c.orbifold);
        rep.add_input(c.resolution, c.resolution);
        OrbifoldData o;
        ResolutionChoice r;
        Expectations ex;
        try {
            o = orbifold_from_json(oj.contains("orbifold") ? oj["orbifold"] : oj);
            r = resolution_from_json(rj.contains("resolution") ? rj["resolution"] : rj);
            if (rj.contains("expected")) ex = expectations_from_json(rj["expected"]);
        } catch (const std::exception& e) {
            throw InputError(std::string("invalid orbifold/resolution input: ") + e.what());
        }
        count_one(o.name.empty() ? "input" : o.name, o, r, ex, rep, csv);
    }
}

// --------------------------------------------------------------------------- singular-set

void singular_set_cmd(const RunConfig& c, Report& rep, std::string& csv) {
    if (c.fixtures.empty()) throw InputError("singular-set needs --fixture");
    csv = csv_line({"source", "component", "stratum", "isotropy", "dim", "gamma", "g_alpha"});
    const G2Form form = G2Form::standard();
    for (const auto& f : load_all(c, rep)) {
        const std::string label = f.fixture.tag.empty() ? f.path.stem().string() : f.fixture.tag;
        const auto& o = f.fixture.orbifold;
        json item;
        if (!o.global) {
            rep.note(label + ": partial fixture, only local component data is stored");
            json comps = json::array();
            for (const auto& lc : o.components) comps.push_back(to_json(lc));
            item["local_components"] = comps;
            rep.results()[label] = item;
            continue;
        }
        auto t0 = Clock::now();
        std::size_t g = 0;
        for (const auto& gen : o.global->generators) {
            bool ok = preserves_phi(gen, form);
            rep.check(label + ".generator" + std::to_string(++g) + ".preserves_phi", ok, "exact", ok);
        }
        SingularSet ss = singular_components(*o.global);
        item = to_json(ss);
        std::map<std::string, std::size_t> strata;
        json models = json::array();
        for (const auto& comp : ss.components) {
            ++strata[comp.stratum];
            LocalModel lm = local_model(*o.global, comp);
            models.push_back(to_json(lm));
            rep.check(label + "." + comp.id + ".dim", comp.dim(), 3, comp.dim() == 3);
            csv += csv_line({label, comp.id, comp.stratum, comp.isotropy, std::to_string(comp.dim()), lm.gamma,
                             to_string(lm.g_alpha)});
        }
        item["local_models"] = models;
        item["strata"] = strata;
        json actions = json::object();
        for (const auto& sym : o.symmetries) {
            ComponentAction act = symmetry_action_on_components(*o.global, ss, sym.map, form);
            actions[sym.name] = to_json(act);
        }
        item["symmetry_actions"] = actions;
        rep.time(label, Clock::now() - t0);
        rep.results()[label] = item;

        const auto& ex = f.fixture.expected;
        if (ex.components) rep.expect(label + ".components", *ex.components, ss.components.size());
        for (const auto& [s, n] : ex.strata) rep.expect(label + ".strata." + s, n, strata.count(s) ? strata.at(s) : 0);
    }
}

// --------------------------------------------------------------------------- fixed-locus

QMat rotation_by_name(const std::string& n) {
    if (n == "I") return to_q(ZMat::identity(3));
    if (n == "R2") return to_q(matrix_R2());
    if (n == "R3") return to_q(matrix_R3());
    if (n == "R4") return to_q(matrix_R4());
    if (n == "R6") return to_q(matrix_R6());
    if (n == "R+") return to_q(matrix_Rplus());
    if (n == "R-") return to_q(matrix_Rminus());
    throw InputError("unknown rotation '" + n + "' (use I, R2, R3, R4, R6, R+, R-)");
}

void fixed_locus_one(const std::string& label, const std::vector<QMat>& rots, const std::string& ade, Report& rep,
                     std::string& csv) {
    RootSystemData rs = root_system(ade);
    auto t0 = Clock::now();
    FixedLocus fl = fixed_locus(rots, rs);
    rep.time(label, Clock::now() - t0);
    json item = to_json(fl);
    item["ade"] = ade;
    rep.results()[label] = item;
    std::size_t i = 0;
    for (const auto& comp : fl.components) {
        ++i;
        bool fixed = comp.witness.has_value();
        bool off = fixed && !on_wall(rs, *comp.witness);
        if (fixed)
            for (std::size_t r = 0; r < rots.size(); ++r)
                fixed = fixed && rots[r] * weyl_act(comp.weyl_tuple[r], *comp.witness) == *comp.witness;
        rep.check(label + ".component" + std::to_string(i) + ".witness", fixed && off, "exact: fixed and off every wall",
                  fixed && off);
        csv += csv_line({label, std::to_string(i), std::to_string(comp.dim()), std::to_string(comp.orbit_size)});
    }
}

void fixed_locus_cmd(const RunConfig& c, Report& rep, std::string& csv) {
    csv = csv_line({"source", "component", "dim", "orbit_size"});
    if (c.fixtures.empty() && c.ade.empty()) throw InputError("fixed-locus needs --fixture or --ade with --rotations");
    for (const auto& f : load_all(c, rep)) {
        const std::string tag = f.fixture.tag.empty() ? f.path.stem().string() : f.fixture.tag;
        std::set<std::string> done;
        for (const auto& lc : f.fixture.orbifold.components) {
            std::vector<QMat> rots;
            try {
                rots = rho_rotations(lc);
            } catch (const std::invalid_argument& e) {
                rep.note(tag + "." + lc.id + ": " + e.what());
                continue;
            }
            if (rots.empty()) continue;
            fixed_locus_one(tag + "." + lc.id, rots, lc.ade, rep, csv);
        }
    }
    if (!c.ade.empty()) {
        if (c.rotations.empty()) throw InputError("--ade needs --rotations");
        std::vector<QMat> rots;
        std::string label = c.ade;
        for (const auto& r : c.rotations) {
            rots.push_back(rotation_by_name(r));
            label += "." + r;
        }
        try {
            fixed_locus_one(label, rots, c.ade, rep, csv);
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
    }
}

// --------------------------------------------------------------------------- verify-gh

ImVec ivec(Rational a, Rational b, Rational c) { return ImVec{a, b, c}; }

std::vector<std::pair<std::string, GHConfig>> gh_configs(const RunConfig& c, Report& rep) {
    std::vector<std::pair<std::string, GHConfig>> out{
        {"pair", GHConfig::make({ivec(1, 0, 0), ivec(-1, 0, 0)})},
        {"triple", GHConfig::make({ivec(Rational(-3, 2), 0, 0), ivec(Rational(1, 2), 0, 0), ivec(1, 0, 0)})},
        {"square", GHConfig::make({ivec(1, 0, 0), ivec(0, 2, 0), ivec(-1, 0, 0), ivec(0, -2, 0)})},
    };
    for (const auto& f : load_all(c, rep)) {
        std::size_t n = 0;
        for (const auto& e : f.fixture.resolution.entries) {
            ++n;
            const auto& lc = f.fixture.orbifold.component(e.component);
            if (lc.ade.empty() || lc.ade[0] != 'A') continue;
            out.emplace_back(f.fixture.tag + ".entry" + std::to_string(n), GHConfig::make(to_charges(e.zeta)));
        }
    }
    return out;
}

Vec3 probe_point(const GHConfig& g, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-2.5, 2.5);
    for (;;) {
        Vec3 q{u(rng), u(rng), u(rng)};
        bool far = true;
        for (const auto& ch : g.charges) {
            Vec3 z = to_double(ch);
            double d = std::hypot(q[0] - z[0], q[1] - z[1], q[2] - z[2]);
            far = far && d > 0.4;
        }
        if (far) return q;
    }
}

void verify_gh_cmd(const RunConfig& c, Report& rep, std::string& csv) {
    const auto& tol = c.tolerances;
    csv = csv_line({"section", "config", "x", "y"});
    std::mt19937_64 rng(c.seed);
    const std::vector<double> ladder{0.08, 0.04, 0.02};

    auto t0 = Clock::now();
    json harm = json::object();
    for (const auto& [name, g] : gh_configs(c, rep)) {
        json pts = json::array();
        for (int p = 0; p < 3; ++p) {
            Vec3 q = probe_point(g, rng);
            std::vector<double> res;
            for (double h : ladder) {
                res.push_back(std::abs(gh_harmonicity_residual(g, q, h)));
                csv += csv_line({"harmonicity", name + "#" + std::to_string(p), num(h), num(res.back())});
            }
            json ratios = json::array();
            for (std::size_t i = 1; i < res.size(); ++i) {
                double ratio = res[i - 1] / res[i];
                ratios.push_back(ratio);
                bool ok = ratio >= tol["harmonicity_ratio_min"] && ratio <= tol["harmonicity_ratio_max"];
                rep.check("harmonicity." + name + "#" + std::to_string(p) + ".ratio" + std::to_string(i), ratio,
                          json{tol["harmonicity_ratio_min"], tol["harmonicity_ratio_max"]}, ok);
            }
            pts.push_back({{"point", {q[0], q[1], q[2]}}, {"h", ladder}, {"residuals", res}, {"ratios", ratios}});
        }
        harm[name] = pts;
    }
    rep.results()["harmonicity"] = harm;
    rep.time("harmonicity", Clock::now() - t0);

    // Single monopole with a string along -k. The stencil error scales like h^2 / |q|^4,
    // so probes sit at |q| >= 1.5 and away from the string.
    t0 = Clock::now();
    auto mono = GHConfig::make({ivec(0, 0, 0), ivec(0, 0, 0)});
    json forms = json::array();
    const std::vector<Vec3> probes{{1.2, -0.7, 0.9}, {-1.1, 1.3, 0.4}, {0.5, -0.9, 1.6}};
    for (std::size_t p = 0; p < probes.size(); ++p) {
        FormCheck fc = gh_form_closedness(mono, probes[p], {0, 0, -1}, 1e-3);
        forms.push_back({{"point", {probes[p][0], probes[p][1], probes[p][2]}},
                         {"closedness", fc.closedness},
                         {"algebraic", fc.algebraic}});
        rep.check("monopole.point" + std::to_string(p + 1) + ".residual", fc.residual(), tol["closedness_max"],
                  fc.residual() <= tol["closedness_max"]);
    }
    rep.results()["monopole_forms"] = forms;
    rep.time("monopole", Clock::now() - t0);

    // Seeded balanced configurations: |V - V_0| decays like r^-3.
    t0 = Clock::now();
    std::uniform_int_distribution<int> numd(-9, 9), dend(1, 7);
    auto rat = [&] {
        Rational r(numd(rng), dend(rng));
        r.canonicalize();
        return r;
    };
    json decay = json::array();
    int made = 0;
    for (int t = 0; made < 20 && t < 100; ++t) {
        int k = 2 + t % 3;
        std::vector<ImVec> ch;
        ImVec sum;
        for (int a = 0; a < k; ++a) {
            ch.push_back(ivec(rat(), rat(), rat()));
            sum = sum + ch.back();
        }
        ch.push_back(Rational(-1) * sum);
        auto g = GHConfig::make(ch);
        if (g.is_zero()) continue;
        ++made;
        DecayFit fit = gh_decay_exponent(g, default_decay_ladder(g));
        json cj = json::array();
        for (const auto& x : g.charges) cj.push_back(to_json(x));
        decay.push_back({{"charges", cj}, {"slope", fit.slope}, {"radii", fit.radii}, {"deviation", fit.deviation}});
        for (std::size_t i = 0; i < fit.radii.size(); ++i)
            csv += csv_line({"decay", "config" + std::to_string(made), num(fit.radii[i]), num(fit.deviation[i])});
        rep.check("decay.config" + std::to_string(made) + ".slope", fit.slope, tol["decay_slope_max"],
                  fit.slope <= tol["decay_slope_max"]);
    }
    rep.results()["decay"] = decay;
    rep.time("decay", Clock::now() - t0);
}

// --------------------------------------------------------------------------- fueter-demo

void fueter_demo_cmd(const RunConfig& c, Report& rep, std::string& csv) {
    const auto& tol = c.tolerances;
    csv = csv_line({"section", "key", "x", "y"});

    auto t0 = Clock::now();
    const Eigen::MatrixXd A = two_block_model(2, 4, 2);
    auto base = SpectralOperator::make(A, 1);
    rep.results()["model"] = {{"kernel_dimension", kernel_dimension(base)},
                              {"selfadjointness_residual", selfadjointness_residual(base)},
                              {"eigenvalues", {0, 0, 2, -2, 3, -3}}};
    json sweep = json::object();
    for (NormChoice n : {NormChoice::Holder, NormChoice::L2}) {
        json rows = json::array();
        double lo = 1e300, hi = 0;
        for (double L = 1; L <= 64; L *= 2) {
            auto est = estimate_constant(SpectralOperator::make(A, L), n, c.trials, c.seed);
            lo = std::min(lo, est.empirical);
            hi = std::max(hi, est.empirical);
            rows.push_back({{"L", L}, {"empirical", est.empirical}, {"unnormalized", est.unnormalized},
                            {"fourier_oracle", est.fourier_oracle}, {"trials", est.trials}});
            csv += csv_line({"constant", to_string(n), num(L), num(est.empirical)});
            if (n == NormChoice::L2) {
                double factor = est.empirical / est.fourier_oracle;
                rep.check("estimate.l2.L" + num(L) + ".oracle_factor", factor, tol["fourier_factor_max"],
                          factor <= tol["fourier_factor_max"]);
            }
        }
        double variation = hi / lo - 1;
        rep.check("estimate." + to_string(n) + ".variation", variation, tol["l_variation_max"],
                  variation <= tol["l_variation_max"]);
        sweep[to_string(n)] = rows;
    }
    rep.results()["estimate"] = sweep;
    rep.time("estimate", Clock::now() - t0);

    t0 = Clock::now();
    ContractionProblem p;
    p.c1 = 0.5;
    p.c2 = 1;
    p.c3 = 0.25;
    json runs = json::array();
    double T = contraction_threshold(p);
    double bound = 2 * p.c_E();
    for (int k = 2; k <= 10; ++k) {
        p.t = std::ldexp(1.0, -k);
        auto res = contraction_solve(p, default_error_term(p));
        double worst_ratio = 0;
        for (std::size_t i = 1; i < res.steps.size(); ++i)
            if (res.steps[i - 1] > 0 && res.steps[i] > 1e-14 * res.v.norm())
                worst_ratio = std::max(worst_ratio, res.steps[i] / res.steps[i - 1]);
        double scaled = res.v.norm() / std::pow(p.t, 1.5);
        runs.push_back({{"t", p.t}, {"status", to_string(res.status)}, {"iterations", res.steps.size()},
                        {"norm_v", res.v.norm()}, {"scaled_norm", scaled}, {"predicted_lipschitz", res.predicted_lipschitz},
                        {"max_step_ratio", worst_ratio}, {"residual", res.residual}});
        csv += csv_line({"contraction", "scaled_norm", num(p.t), num(scaled)});
        const std::string key = "contraction.t2^-" + std::to_string(k);
        bool ok = res.status == ContractionStatus::Converged && res.residual <= tol["contraction_residual_max"];
        rep.check(key + ".residual", res.residual, tol["contraction_residual_max"], ok);
        rep.check(key + ".step_ratio", worst_ratio, res.predicted_lipschitz, worst_ratio <= res.predicted_lipschitz);
        rep.check(key + ".scaled_norm", scaled, bound, scaled <= bound);
    }
    p.t = 1;
    auto rejected = contraction_solve(p, default_error_term(p));
    auto forced = contraction_solve(p, 40 * default_error_term(p), 200, true);
    rep.check("contraction.out_of_regime.rejected", to_string(rejected.status), "rejected-above-threshold",
              rejected.status == ContractionStatus::RejectedAboveThreshold);
    rep.check("contraction.out_of_regime.forced", forced.measured_lipschitz, "non-contractive with ratio >= 1",
              forced.status == ContractionStatus::NonContractive);
    rep.results()["contraction"] = {{"constants", {{"c1", p.c1}, {"c2", p.c2}, {"c3", p.c3}, {"beta", p.beta}, {"gamma", p.gamma}}},
                                    {"threshold", T},
                                    {"sweep", runs},
                                    {"rejected", rejected.message},
                                    {"forced", forced.message}};

    json scalars = json::array();
    for (auto [a, b] : {std::pair{0.1, 1.0}, std::pair{0.01, 3.0}, std::pair{0.2, 0.5}}) {
        auto r = scalar_quadratic_solve(a, b);
        double err = std::abs(r.value - r.closed_form);
        scalars.push_back({{"a", a}, {"b", b}, {"value", r.value}, {"closed_form", r.closed_form}, {"iterations", r.iterations}});
        rep.check("scalar.a" + num(a) + ".b" + num(b), err, tol["scalar_residual_max"],
                  r.converged && err <= tol["scalar_residual_max"]);
    }
    rep.results()["scalar"] = scalars;
    rep.time("contraction", Clock::now() - t0);
}

// --------------------------------------------------------------------------- enumerate-bieberbach

json bieberbach_entry(const std::string& label, const BieberbachGroup& g, int height, Report& rep, std::string& csv) {
    TorsionCheck tc = torsion_free_check(g);
    auto q = g.quotient();
    rep.check(label + ".torsion_free", tc.torsion_free, "exact", tc.torsion_free);
    json axes = json::array();
    for (const auto& xi : eligible_axes(g, height)) {
        BaseOrbifold bo = base_orbifold(g, xi);
        axes.push_back({{"xi", to_json(xi)}, {"central", is_central(xi, g)}, {"n_f", bo.n_f}, {"topology", bo.topology},
                        {"isotropy", bo.isotropy_orders()}});
        std::string iso;
        for (auto o : bo.isotropy_orders()) iso += (iso.empty() ? "" : " ") + std::to_string(o);
        csv += csv_line({label, to_json(xi).dump(), std::to_string(bo.n_f), bo.topology, iso});
    }
    return {{"group", to_json(g)}, {"quotient_order", q.size()}, {"torsion", to_json(tc)}, {"axes", axes}};
}

void enumerate_bieberbach_cmd(const RunConfig& c, Report& rep, std::string& csv) {
    csv = csv_line({"group", "xi", "n_f", "topology", "isotropy"});
    auto t0 = Clock::now();
    json classes = json::object();
    for (BieberbachClass cls : {BieberbachClass::Trivial, BieberbachClass::C2, BieberbachClass::C3, BieberbachClass::C4,
                                BieberbachClass::C6, BieberbachClass::C2xC2}) {
        Lattice l = (cls == BieberbachClass::C3 || cls == BieberbachClass::C6) ? Lattice::hexagonal() : Lattice::cubic();
        BieberbachGroup g = make_bieberbach(cls, l);
        json e = bieberbach_entry(to_string(cls), g, c.height, rep, csv);
        rep.check(to_string(cls) + ".quotient_order", e["quotient_order"], class_order(cls),
                  e["quotient_order"].get<std::size_t>() == class_order(cls));
        classes[to_string(cls)] = e;
    }
    rep.results()["classes"] = classes;
    json local = json::object();
    for (const auto& f : load_all(c, rep))
        for (const auto& lc : f.fixture.orbifold.components)
            local[f.fixture.tag + "." + lc.id] = bieberbach_entry(f.fixture.tag + "." + lc.id, lc.g_alpha, c.height, rep, csv);
    if (!local.empty()) rep.results()["fixtures"] = local;
    rep.time("enumerate", Clock::now() - t0);
}

// --------------------------------------------------------------------------- list-examples

void list_examples_cmd(const RunConfig& c, Report& rep, std::string& csv) {
    csv = csv_line({"tag", "file", "headline"});
    json cat = json::array();
    for (const auto& e : list_examples(c.data_dir / "fixtures")) {
        json headline = json::array();
        if (!e.expected.by_component.empty()) {
            for (const auto& [k, v] : e.expected.by_component) headline.push_back(v);
        } else if (e.expected.total) {
            headline.push_back(*e.expected.total);
        }
        json ex = json::object();
        if (e.expected.total) ex["total"] = *e.expected.total;
        if (!e.expected.by_component.empty()) ex["by_component"] = e.expected.by_component;
        if (e.expected.components) ex["components"] = *e.expected.components;
        if (!e.expected.strata.empty()) ex["strata"] = e.expected.strata;
        cat.push_back({{"tag", e.tag}, {"name", e.name}, {"file", e.file}, {"sha256", e.sha256},
                       {"description", e.description}, {"expected", ex}, {"headline", headline}});
        std::string h;
        for (const auto& x : headline) h += (h.empty() ? "" : " ") + x.dump();
        csv += csv_line({e.tag, e.file, h});
    }
    rep.results()["catalog"] = cat;
}

}  // namespace

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names{"enumerate-bieberbach", "singular-set", "fixed-locus", "verify-gh",
                                                "count-associatives",   "fueter-demo",  "list-examples"};
    return names;
}

RunResult run(const RunConfig& c) {
    Report rep(c.command);
    rep.echo(echo_of(c));
    rep.tolerances(c.tolerances);
    std::string csv;
    if (c.command == "count-associatives") count_associatives_cmd(c, rep, csv);
    else if (c.command == "singular-set") singular_set_cmd(c, rep, csv);
    else if (c.command == "fixed-locus") fixed_locus_cmd(c, rep, csv);
    else if (c.command == "verify-gh") verify_gh_cmd(c, rep, csv);
    else if (c.command == "fueter-demo") fueter_demo_cmd(c, rep, csv);
    else if (c.command == "enumerate-bieberbach") enumerate_bieberbach_cmd(c, rep, csv);
    else if (c.command == "list-examples") list_examples_cmd(c, rep, csv);
    else throw InputError("unknown command '" + c.command + "'");
    return {rep.finish(), csv, rep.passed() ? 0 : 1};
}

int run_and_emit(const RunConfig& c) {
    RunResult r;
    try {
        if (c.csv && c.out_dir.empty()) throw InputError("--csv needs --out");
        r = run(c);
    } catch (const InputError& e) {
        std::cerr << "g2k: error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "g2k: error: " << c.command << ": " << e.what() << "\n";
        return 2;
    }
    std::string text = r.report.dump(2) + "\n";
    if (c.out_dir.empty()) {
        std::cout << text;
    } else {
        atomic_write(c.out_dir / (c.command + ".json"), text);
        if (c.csv) atomic_write(c.out_dir / (c.command + ".csv"), r.csv);
    }
    for (const auto& e : r.report["expectations"])
        if (!e["pass"].get<bool>())
            std::cerr << "g2k: expectation " << e["name"].get<std::string>() << " failed: expected " << e["expected"]
                      << ", got " << e["actual"] << "\n";
    for (const auto& ch : r.report["checks"])
        if (!ch["pass"].get<bool>()) std::cerr << "g2k: check " << ch["name"].get<std::string>() << " failed\n";
    std::cerr << c.command << ": " << (r.exit_code == 0 ? "PASS" : "FAIL") << "\n";
    return r.exit_code;
}

}  // namespace g2k::cli
