#pragma once

#include "g2k/associative_pipeline.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <string>

namespace g2k {

using json = nlohmann::json;

// Rationals are written as {"num": n, "den": d}; readers also accept integers and "p/q" strings.
json to_json(const Rational& x);
Rational rational_from_json(const json& j);
json to_json(const QVec& v);
json to_json(const ZVec& v);
json to_json(const QMat& m);
json to_json(const ZMat& m);
json to_json(const ImVec& v);
json to_json(const Quat& q);
QVec qvec_from_json(const json& j);
ZVec zvec_from_json(const json& j);
QMat qmat_from_json(const json& j);
ZMat zmat_from_json(const json& j);
ImVec imvec_from_json(const json& j);
Quat quat_from_json(const json& j);

json to_json(const BieberbachGroup& g);
BieberbachGroup bieberbach_from_json(const json& j);
json to_json(const AffineZ& g);
AffineZ affine_from_json(const json& j);
json to_json(const CrystalGroupR7& g);
CrystalGroupR7 crystal_group_from_json(const json& j);

json to_json(const QuatMap& m);
QuatMap quat_map_from_json(const json& j);
json to_json(const LocalComponentData& c);
LocalComponentData local_component_from_json(const json& j);
json to_json(const OrbifoldData& o);
OrbifoldData orbifold_from_json(const json& j);
json to_json(const ResolutionEntry& e);
ResolutionEntry resolution_entry_from_json(const json& j);
json to_json(const ResolutionChoice& r);
ResolutionChoice resolution_from_json(const json& j);

struct Expectations {
    std::optional<std::size_t> total;
    std::map<std::string, std::size_t> by_component;
    std::optional<std::size_t> components;  // singular-set size
    std::map<std::string, std::size_t> strata;
};
Expectations expectations_from_json(const json& j);

struct Fixture {
    std::string name, tag, description;
    OrbifoldData orbifold;
    ResolutionChoice resolution;
    Expectations expected;
};
Fixture fixture_from_json(const json& j);

// reports
json to_json(const TorsionCheck& t);
json to_json(const BaseOrbifold& b);
json to_json(const SingularComponent& c);
json to_json(const SingularSet& s);
json to_json(const LocalModel& m);
json to_json(const ComponentAction& a);
json to_json(const FixedLocusComponent& c);
json to_json(const FixedLocus& f);
json to_json(const CurveClass& c);
json to_json(const CheckItem& i);
json to_json(const AssociativeCertificate& c);
json to_json(const CountReport& r);

}  // namespace g2k
