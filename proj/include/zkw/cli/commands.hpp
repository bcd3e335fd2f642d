#pragma once

#include <chrono>
#include <cstdint>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "zkw/complexes/builder.hpp"
#include "zkw/complexes/json_io.hpp"
#include "zkw/complexes/simplicial_homology.hpp"
#include "zkw/moment_angle/hochster.hpp"
#include "zkw/moment_angle/zk_complex.hpp"
#include "zkw/taylor/face_complex.hpp"
#include "zkw/taylor/monomial_ideal.hpp"
#include "zkw/whitehead/realisation.hpp"
#include "zkw/whitehead/wedge_basis.hpp"
#include "zkw/zigzag/zigzag.hpp"

namespace zkw::cli {

inline constexpr const char* kEngineVersion = "1.0.0";

inline const std::vector<std::string>& verbs() {
  static const std::vector<std::string> v{"homology", "mf",       "subst",        "delta-w", "hurewicz",
                                          "status",   "realises", "taylor",       "taylor-cycle",
                                          "zigzag",   "hochster", "wedge-basis",  "verify"};
  return v;
}

struct Options {
  std::string verb;
  std::optional<std::string> complex;  // expression or path ending in .json
  std::optional<std::string> w;
  std::optional<std::string> chain;    // cellular chain for zigzag
  std::optional<std::string> subset;   // csv of labels
  std::string format = "json";
  std::uint64_t seed = 0;
  std::size_t max_vertices = 20;
  bool timing = false;
};

enum ExitCode { kOk = 0, kInputError = 1, kSizeRefused = 2, kVerificationFailed = 3 };

struct Report {
  int exit_code = kOk;
  nlohmann::ordered_json json;

  std::string render(const std::string& format) const;
};

namespace detail {

using Json = nlohmann::ordered_json;

inline Json face_json(const Face& f) { return Json(f); }

inline Json homology_json(const std::map<int, HomologyGroup>& table) {
  Json out = Json::object();
  for (const auto& [d, g] : table) out[std::to_string(d)] = g.to_string();
  return out;
}

inline Json ranks_json(const std::map<int, HomologyGroup>& table) {
  Json out = Json::object();
  for (const auto& [d, g] : table)
    if (g.rank) out[std::to_string(d)] = g.rank;
  return out;
}

inline std::vector<Face> generator_order(const SimplicialComplex& k) {
  auto mf = k.missing_faces();
  std::stable_sort(mf.begin(), mf.end(), [](const Face& a, const Face& b) { return a.size() < b.size(); });
  return mf;
}

inline SimplicialComplex load_complex(const Options& o) {
  if (!o.complex) throw ValidationError("--complex is required for '" + o.verb + "'");
  const std::string& text = *o.complex;
  SimplicialComplex k;
  if (text.size() > 5 && text.substr(text.size() - 5) == ".json") {
    std::ifstream in(text);
    if (!in) throw ValidationError("cannot read " + text);
    std::stringstream buf;
    buf << in.rdbuf();
    k = complex_from_json_text(buf.str());
  } else {
    k = parse_complex(text);
  }
  if (o.subset) {
    Face j;
    std::stringstream ss(*o.subset);
    for (std::string item; std::getline(ss, item, ',');) {
      try {
        j.push_back(std::stoi(item));
      } catch (const std::exception&) {
        throw ValidationError("--subset expects comma-separated labels");
      }
    }
    j = make_face(j);
    for (int v : j)
      if (!k.has_label(v)) throw ValidationError("--subset label " + std::to_string(v) + " is not a vertex");
    k = k.full_subcomplex(j);
  }
  if (k.vertex_count() > o.max_vertices) throw SizeLimitError("vertex count", o.max_vertices);
  return k;
}

inline WhiteheadExpr load_w(const Options& o) {
  if (!o.w) throw ValidationError("--w is required for '" + o.verb + "'");
  WhiteheadExpr w = parse_whitehead(*o.w);
  if (w.is_leaf()) throw ValidationError("--w must be a bracket");
  if (leaves(w).size() > o.max_vertices) throw SizeLimitError("leaf count", o.max_vertices);
  return w;
}

inline Json taylor_json(const TaylorComplex& t, const TaylorChain& c) {
  return Json{{"chain", taylor_chain_to_string(t, c)}, {"degree", c.degree}};
}

inline Json run_verify(const SimplicialComplex& k, std::uint64_t seed, bool& ok) {
  Json checks = Json::array();
  auto record = [&](const std::string& name, bool pass, const std::string& detail) {
    checks.push_back({{"check", name}, {"pass", pass}, {"detail", detail}});
    ok = ok && pass;
  };
  auto skip = [&](const std::string& name, const std::string& why) {
    checks.push_back({{"check", name}, {"pass", nullptr}, {"detail", "skipped: " + why}});
  };

  if (k.vertex_count() <= 12)
    record("cellular-d-squared", zk_chain_complex(k).d_squared_is_zero(), "");
  else
    skip("cellular-d-squared", "more than 12 vertices");

  auto cellular = zk_homology(k);
  auto hochster = hochster_table(k);
  record("cellular-vs-hochster", cellular == hochster.aggregate,
         "cellular " + homology_json(cellular).dump() + ", hochster " + homology_json(hochster.aggregate).dump());

  auto gens = generator_order(k);
  if (gens.size() <= 16) {
    auto taylor = taylor_homology(TaylorComplex(k));
    record("cellular-vs-taylor", cellular == taylor.by_degree, "taylor " + homology_json(taylor.by_degree).dump());
    bool dictionary = true;
    std::string first;
    for (const auto& [key, g] : taylor.per_component) {
      auto [s, idx] = key;
      auto it = hochster.per_subset.find({label_face(s), label_count(s) - idx - 1});
      if (it == hochster.per_subset.end() || !(it->second == g)) {
        dictionary = false;
        if (first.empty()) first = "subset " + face_to_string(label_face(s)) + " index " + std::to_string(idx);
      }
    }
    record("taylor-degree-dictionary", dictionary, first);
  } else {
    skip("cellular-vs-taylor", "more than 16 missing faces");
  }

  if (gens.size() <= 12 && k.vertex_count() <= 12) {
    auto ideal = MonomialIdeal::stanley_reisner(k);
    auto r = verify_taylor_module_resolution(ideal);
    record("taylor-resolution-exact", r.exact,
           r.exact ? std::to_string(r.multidegrees_checked) + " multidegrees" : r.failure);
    if (gens.size() <= 8) {
      auto c = cone_reconstruction(ideal);
      record("cone-reconstruction", c.matches, c.mismatch);
    }
  } else {
    skip("taylor-resolution-exact", "more than 12 generators or vertices");
  }

  std::mt19937_64 rng(seed);
  const auto labels = k.labels();
  int tried = 0, consistent = 0;
  for (int trial = 0; trial < 10 && labels.size() >= 2; ++trial) {
    Face i;
    for (int v : labels)
      if (rng() % 2) i.push_back(v);
    if (i.size() < 2) continue;
    ++tried;
    try {
      single_product_status(k, i);
      ++consistent;
    } catch (const VerificationError&) {
    }
  }
  record("status-vs-hurewicz", consistent == tried,
         std::to_string(consistent) + "/" + std::to_string(tried) + " random subsets");
  return checks;
}

inline Json dispatch(const Options& o, int& exit_code) {
  const std::string& v = o.verb;
  Json result = Json::object();

  if (v == "delta-w" || v == "hurewicz") {
    auto w = load_w(o);
    if (v == "delta-w") {
      auto d = delta_w(w);
      result["complex"] = complex_to_json(d);
      Json mf = Json::array();
      for (const auto& f : d.missing_faces()) mf.push_back(face_json(f));
      result["missing_faces"] = mf;
    } else {
      auto h = hurewicz_chain(w);
      result["chain"] = chain_to_string(h);
      result["degree"] = h.degree;
    }
    return result;
  }

  SimplicialComplex k = load_complex(o);
  Json gens = Json::array();
  for (const auto& f : generator_order(k)) gens.push_back(face_json(f));
  result["generators"] = gens;

  if (v == "homology") {
    auto h = zk_homology(k);
    result["homology"] = homology_json(h);
    result["ranks"] = ranks_json(h);
  } else if (v == "mf") {
    Json mf = Json::array();
    for (const auto& f : k.missing_faces()) mf.push_back(face_json(f));
    result["missing_faces"] = mf;
  } else if (v == "subst") {
    result["complex"] = complex_to_json(k);
    Json mf = Json::array();
    for (const auto& f : k.missing_faces()) mf.push_back(face_json(f));
    result["missing_faces"] = mf;
  } else if (v == "status") {
    auto w = load_w(o);
    ProductStatus s;
    if (w.bracket_children().empty())
      s = single_product_status(k, w.leaf_children());
    else if (has_nested_shape(w))
      s = nested_shape_status(k, w);
    else
      throw ValidationError("status needs a single or two-level product; use 'realises'");
    result["status"] = to_string(s);
  } else if (v == "realises") {
    auto w = load_w(o);
    auto r = realises_sufficient(k, w);
    result["defined"] = to_string(r.defined);
    result["nontrivial"] = to_string(r.nontrivial);
    result["method"] = r.method;
    if (r.witness) result["witness"] = chain_to_string(*r.witness);
  } else if (v == "taylor") {
    TaylorComplex t(k);
    auto ideal = MonomialIdeal::stanley_reisner(k);
    result["ranks"] = taylor_ranks(ideal);
    result["homology"] = homology_json(taylor_homology(t).by_degree);
  } else if (v == "taylor-cycle") {
    TaylorComplex t(k);
    result["cycle"] = taylor_json(t, nested_taylor_cycle(t, load_w(o)));
  } else if (v == "zigzag") {
    TaylorComplex t(k);
    CellChain z;
    std::optional<WhiteheadExpr> w;
    if (o.chain) {
      z = parse_cell_chain(*o.chain);
    } else {
      w = load_w(o);
      z = hurewicz_chain(*w);
    }
    auto r = koszul_to_taylor(t, z);
    result["input"] = chain_to_string(z);
    result["cycle"] = taylor_json(t, r.cycle);
    result["staircase_holds"] = staircase_holds(t, r.trace);
    if (w && is_nested(*w)) result["matches_closed_form"] = classes_equal_up_to_sign(t, r.cycle, nested_taylor_cycle(t, *w));
    result["trace"] = trace_to_json(t, r.trace);
  } else if (v == "hochster") {
    auto table = hochster_table(k);
    Json rows = Json::array();
    for (const auto& [key, g] : table.per_subset)
      rows.push_back({{"subset", face_json(key.first)}, {"degree", key.second}, {"group", g.to_string()}});
    result["subsets"] = rows;
    result["aggregate"] = homology_json(table.aggregate);
  } else if (v == "wedge-basis") {
    auto b = shifted_wedge_basis(k);
    Json entries = Json::array();
    for (const auto& e : b.entries)
      entries.push_back({{"subset", face_json(e.j)}, {"w", to_string(e.w)}, {"degree", e.chain.degree}});
    result["entries"] = entries;
    result["is_basis"] = b.is_basis;
    if (!b.is_basis) {
      result["detail"] = b.detail;
      exit_code = kVerificationFailed;
    }
  } else if (v == "verify") {
    bool ok = true;
    result["checks"] = run_verify(k, o.seed, ok);
    result["pass"] = ok;
    if (!ok) exit_code = kVerificationFailed;
  } else {
    throw ValidationError("unknown verb '" + v + "'");
  }
  return result;
}

inline void render_text(const Json& j, const std::string& indent, std::string& out) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& value = it.value();
    const std::string key = j.is_object() ? it.key() : "-";
    if (value.is_object() && !value.empty()) {
      out += indent + key + ":\n";
      render_text(value, indent + "  ", out);
    } else if (value.is_array() && !value.empty() && value.front().is_object()) {
      out += indent + key + ":\n";
      for (const auto& item : value) {
        std::string line;
        for (auto f = item.begin(); f != item.end(); ++f)
          line += (line.empty() ? "" : "  ") + f.key() + "=" + (f->is_string() ? f->get<std::string>() : f->dump());
        out += indent + "  " + line + "\n";
      }
    } else {
      out += indent + key + ": " + (value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
    }
  }
}

}  // namespace detail

inline std::string Report::render(const std::string& format) const {
  if (format == "text") {
    std::string out;
    detail::render_text(json, "", out);
    return out;
  }
  return json.dump(2) + "\n";
}

/// Runs one verb. Field order: verb, inputs, engine, result (or error), then timing when asked.
inline Report run(const Options& o) {
  Report r;
  auto start = std::chrono::steady_clock::now();
  r.json["verb"] = o.verb;
  detail::Json inputs = detail::Json::object();
  if (o.complex) inputs["complex"] = *o.complex;
  if (o.w) inputs["w"] = *o.w;
  if (o.chain) inputs["chain"] = *o.chain;
  if (o.subset) inputs["subset"] = *o.subset;
  if (o.verb == "verify") inputs["seed"] = o.seed;
  r.json["inputs"] = inputs;
  r.json["engine"] = kEngineVersion;
  auto fail = [&](int code, const std::string& kind, const std::string& message) {
    r.exit_code = code;
    r.json["error"] = {{"kind", kind}, {"message", message}};
  };
  try {
    if (o.format != "json" && o.format != "text") throw ValidationError("--format must be json or text");
    if (std::find(verbs().begin(), verbs().end(), o.verb) == verbs().end())
      throw ValidationError("unknown verb '" + o.verb + "'");
    if (o.w) r.json["inputs"]["w_normalised"] = to_string(parse_whitehead(*o.w));
    r.json["result"] = detail::dispatch(o, r.exit_code);
  } catch (const ParseError& e) {
    fail(kInputError, "parse", e.what());
    r.json["error"]["line"] = e.line();
    r.json["error"]["column"] = e.column();
  } catch (const ValidationError& e) {
    fail(kInputError, "validation", e.what());
  } catch (const SizeLimitError& e) {
    fail(kSizeRefused, "size", e.what());
    r.json["error"]["bound"] = e.bound();
  } catch (const VerificationError& e) {
    fail(kVerificationFailed, "verification", e.what());
  }
  if (o.timing)
    r.json["timing_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace zkw::cli
