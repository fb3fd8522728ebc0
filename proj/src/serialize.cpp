#include "nilclean/serialize.hpp"

namespace nilclean {

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorKind::BadParameter, "malformed JSON: " + what);
}

template <class T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    malformed(std::string("bad type for field '") + key + "'");
  }
}

}  // namespace

Json to_json(const Ideal& ideal) {
  Json j;
  j["ring"] = ideal.ring()->spec();
  j["members"] = ideal.elements();
  if (ideal.generators()) j["generators"] = *ideal.generators();
  return j;
}

Ideal ideal_from_json(const Json& j, const BuildOptions& opts) {
  auto ring = build_ring(field<std::string>(j, "ring"), opts);
  const auto members = field<std::vector<Index>>(j, "members");
  ElementSet set(ring->order());
  for (Index m : members) {
    if (m >= ring->order()) malformed("member index out of range");
    set.insert(m);
  }
  std::optional<std::vector<Index>> gens;
  if (j.contains("generators")) gens = field<std::vector<Index>>(j, "generators");
  return Ideal::from_members(std::move(ring), std::move(set), std::move(gens));
}

Json to_json(const Decomposition& d) {
  Json j;
  j["element"] = d.element;
  j["idempotent"] = d.idempotent;
  j["second"] = d.second;
  j["kind"] = std::string(to_string(d.kind));
  j["commutes"] = d.commutes;
  j["nil_index"] = d.nil_index ? Json(*d.nil_index) : Json(nullptr);
  return j;
}

Decomposition decomposition_from_json(const Json& j) {
  Decomposition d;
  d.element = field<Index>(j, "element");
  d.idempotent = field<Index>(j, "idempotent");
  d.second = field<Index>(j, "second");
  const auto kind = field<std::string>(j, "kind");
  if (kind == "clean") {
    d.kind = DecompositionKind::Clean;
  } else if (kind == "nil-clean") {
    d.kind = DecompositionKind::NilClean;
  } else {
    malformed("unknown decomposition kind '" + kind + "'");
  }
  d.commutes = field<bool>(j, "commutes");
  if (j.contains("nil_index") && !j.at("nil_index").is_null()) {
    d.nil_index = field<Index>(j, "nil_index");
  }
  return d;
}

Json to_json(const TheoremReport& r) {
  Json j;
  j["id"] = r.id;
  j["paper_result"] = r.paper_result;
  j["instances_tested"] = r.instances_tested;
  j["hypotheses_met"] = r.hypotheses_met;
  j["verdict"] = std::string(to_string(r.verdict));
  if (r.witness) {
    Json w;
    w["ring"] = r.witness->ring;
    w["ideal"] = r.witness->ideal;
    w["element"] = r.witness->element ? Json(*r.witness->element) : Json(nullptr);
    w["reason"] = r.witness->reason;
    j["witness"] = std::move(w);
  }
  j["millis"] = r.millis ? Json(*r.millis) : Json(nullptr);
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

TheoremReport report_from_json(const Json& j) {
  TheoremReport r;
  r.id = field<std::string>(j, "id");
  r.paper_result = field<std::string>(j, "paper_result");
  r.instances_tested = field<std::size_t>(j, "instances_tested");
  r.hypotheses_met = field<std::size_t>(j, "hypotheses_met");
  const auto verdict = verdict_from_string(field<std::string>(j, "verdict"));
  if (!verdict) malformed("unknown verdict");
  r.verdict = *verdict;
  if (j.contains("witness")) {
    const Json& w = j.at("witness");
    Witness wit;
    wit.ring = field<std::string>(w, "ring");
    wit.ideal = field<std::vector<Index>>(w, "ideal");
    if (w.contains("element") && !w.at("element").is_null()) wit.element = field<Index>(w, "element");
    wit.reason = field<std::string>(w, "reason");
    r.witness = std::move(wit);
  }
  if (j.contains("millis") && !j.at("millis").is_null()) r.millis = field<double>(j, "millis");
  if (j.contains("notes")) r.notes = field<std::vector<std::string>>(j, "notes");
  return r;
}

Json table_to_json(const FiniteRing& ring) {
  const Index n = ring.order();
  Json add = Json::array(), mul = Json::array();
  for (Index x = 0; x < n; ++x) {
    std::vector<Index> add_row(n), mul_row(n);
    for (Index y = 0; y < n; ++y) {
      add_row[y] = ring.add(x, y);
      mul_row[y] = ring.mul(x, y);
    }
    add.push_back(std::move(add_row));
    mul.push_back(std::move(mul_row));
  }
  Json j;
  j["order"] = n;
  j["zero"] = ring.zero_index();
  j["one"] = ring.one_index();
  j["add"] = std::move(add);
  j["mul"] = std::move(mul);
  return j;
}

RingPtr table_ring_from_json(const Json& j) {
  const auto order = field<std::int64_t>(j, "order");
  if (order < 2 || order > (1 << 16)) malformed("order must be between 2 and 65536");
  const auto n = static_cast<Index>(order);
  auto read_table = [&](const char* key) {
    const auto rows = field<std::vector<std::vector<std::int64_t>>>(j, key);
    if (rows.size() != n) malformed(std::string(key) + " must have order rows");
    std::vector<Index> flat;
    flat.reserve(std::size_t{n} * n);
    for (const auto& row : rows) {
      if (row.size() != n) malformed(std::string(key) + " rows must have order entries");
      for (auto v : row) {
        if (v < 0 || v >= order) malformed(std::string(key) + " entry out of range");
        flat.push_back(static_cast<Index>(v));
      }
    }
    return flat;
  };
  const auto zero = field<std::int64_t>(j, "zero");
  const auto one = field<std::int64_t>(j, "one");
  if (zero < 0 || zero >= order || one < 0 || one >= order) malformed("zero/one out of range");
  return make_table_ring(n, read_table("add"), read_table("mul"), static_cast<Index>(zero),
                         static_cast<Index>(one));
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace nilclean
