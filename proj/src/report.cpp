#include "hsgon/report.hpp"

#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

#include "hsgon/cyclotomic.hpp"
#include "hsgon/error.hpp"
#include "hsgon/polygon.hpp"
#include "hsgon/ratfun.hpp"
#include "hsgon/vanishing.hpp"

namespace hsgon {

namespace {

std::string rational_text(const Rational& q) { return q.get_str(); }

Json poly_json(const PolyQ& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(rational_text(c));
  return {{"coeffs", coeffs}, {"text", p.str('z')}};
}

Json cyc_json(const CycNum& x) {
  Json coeffs = Json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back(rational_text(c));
  return {{"coeffs", coeffs}, {"text", x.str()}};
}

const Json& require(const Json& obj, const char* key, const char* what) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw Error(ErrorCode::ParseError, std::string(what) + " needs a \"" + key + "\" field");
  }
  return obj.at(key);
}

char letter_name(const Json& v) {
  if (!v.is_string() || v.get<std::string>().size() != 1) {
    throw Error(ErrorCode::ParseError, "alphabet entries must be one-character strings");
  }
  return v.get<std::string>()[0];
}

Alphabet parse_alphabet(const Json& v) {
  if (!v.is_array()) throw Error(ErrorCode::ParseError, "\"alphabet\" must be an array");
  std::vector<char> names;
  for (const auto& x : v) names.push_back(letter_name(x));
  return Alphabet(std::move(names));
}

std::string word_string(const Json& v, const char* what) {
  if (!v.is_string()) throw Error(ErrorCode::ParseError, std::string(what) + " must be a string");
  return v.get<std::string>();
}

Json word_json(const FreeWord& w) { return w.str(); }

}  // namespace

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str());
}

SchreierGraph parse_subgroup(const Json& doc, const std::optional<Alphabet>& fallback) {
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, "a subgroup must be an object");
  Alphabet alphabet = doc.contains("alphabet") ? parse_alphabet(doc.at("alphabet"))
                      : fallback                ? *fallback
                                                : Alphabet({'a', 'b'});
  if (fallback && !(alphabet == *fallback)) {
    throw Error(ErrorCode::AlphabetMismatch, "subgroup alphabet differs from the partition alphabet");
  }
  if (doc.contains("generators")) {
    const Json& gens = doc.at("generators");
    if (!gens.is_array()) throw Error(ErrorCode::ParseError, "\"generators\" must be an array");
    std::vector<FreeWord> words;
    for (const auto& g : gens) words.push_back(parse_word(word_string(g, "a generator"), alphabet));
    return fold(words, alphabet);
  }
  const Json& action = require(doc, "action", "a subgroup without generators");
  if (!action.is_object()) throw Error(ErrorCode::ParseError, "\"action\" must be an object");
  std::size_t degree = 0;
  if (doc.contains("degree")) {
    if (!doc.at("degree").is_number_unsigned()) throw Error(ErrorCode::ParseError, "\"degree\" must be a non-negative integer");
    degree = doc.at("degree").get<std::size_t>();
  }
  Vertex base = 0;
  if (doc.contains("base")) {
    if (!doc.at("base").is_number_unsigned()) throw Error(ErrorCode::ParseError, "\"base\" must be a non-negative integer");
    base = doc.at("base").get<Vertex>();
  }
  if (action.size() != alphabet.rank()) {
    throw Error(ErrorCode::AlphabetMismatch, "\"action\" must list every generator exactly once");
  }
  std::vector<Permutation> perms(alphabet.rank());
  for (const auto& [name, images] : action.items()) {
    if (name.size() != 1) throw Error(ErrorCode::ParseError, "action keys must be single letters");
    const Letter l = alphabet.letter_of(name[0]);
    if (l <= 0) throw Error(ErrorCode::UnknownLetter, "action key '" + name + "' is not a generator");
    if (!images.is_array()) throw Error(ErrorCode::ParseError, "action images must be arrays");
    Permutation p;
    for (const auto& x : images) {
      if (!x.is_number_unsigned()) throw Error(ErrorCode::ParseError, "action images must be vertex numbers");
      p.push_back(x.get<Vertex>());
    }
    if (degree != 0 && p.size() != degree) {
      throw Error(ErrorCode::NotPermutation, "image list of '" + name + "' has length " +
                                                 std::to_string(p.size()) + ", degree is " +
                                                 std::to_string(degree));
    }
    perms[static_cast<std::size_t>(l - 1)] = std::move(p);
  }
  return from_action(alphabet, std::move(perms), base);
}

std::vector<CosetPart> parse_partition(const Json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, "a partition must be an object");
  const Alphabet alphabet = doc.contains("alphabet") ? parse_alphabet(doc.at("alphabet")) : Alphabet({'a', 'b'});
  const Json& parts = require(doc, "parts", "a partition");
  if (!parts.is_array() || parts.empty()) throw Error(ErrorCode::ParseError, "\"parts\" must be a nonempty array");
  std::vector<CosetPart> out;
  for (const auto& p : parts) {
    SchreierGraph g = parse_subgroup(require(p, "subgroup", "a part"), alphabet);
    FreeWord rep = p.contains("rep") ? parse_word(word_string(p.at("rep"), "\"rep\""), alphabet) : FreeWord(alphabet);
    out.push_back(make_part(std::move(g), std::move(rep)));
  }
  return out;
}

Json alphabet_json(const Alphabet& alphabet) {
  Json out = Json::array();
  for (char c : alphabet.names()) out.push_back(std::string(1, c));
  return out;
}

Json subgroup_json(const SchreierGraph& graph) {
  Json action = Json::object();
  for (std::size_t x = 0; x < graph.rank(); ++x) action[std::string(1, graph.alphabet().name(x))] = graph.action()[x];
  return {{"alphabet", alphabet_json(graph.alphabet())},
          {"degree", graph.index()},
          {"action", action},
          {"base", graph.base()}};
}

Json partition_json(const CosetPartition& partition) {
  Json parts = Json::array();
  for (const auto& p : partition.parts()) parts.push_back({{"subgroup", subgroup_json(p.graph)}, {"rep", word_json(p.rep)}});
  return {{"alphabet", alphabet_json(partition.alphabet())}, {"parts", parts}};
}

Json graph_report(const SchreierGraph& graph) {
  const IntMatrix a = transition_matrix(graph);
  Json rows = Json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(a(i, j));
    rows.push_back(row);
  }
  const SpectralSummary s = spectral_summary(graph);
  return {{"alphabet", alphabet_json(graph.alphabet())},
          {"index", graph.index()},
          {"period", s.period},
          {"lambda_pf", s.lambda_pf},
          {"action", subgroup_json(graph).at("action")},
          {"transition_matrix", rows},
          {"denominator", poly_json(denominator_poly(a))}};
}

Json census_report(const CosetPartition& partition, unsigned k_max, std::uint64_t guard) {
  const WordCensus census = word_census(partition, k_max, guard);
  Json parts = Json::array();
  for (std::size_t i = 0; i < partition.size(); ++i) {
    parts.push_back({{"part", i + 1},
                     {"rep", word_json(partition.parts()[i].rep)},
                     {"index", partition.parts()[i].index},
                     {"counts", census.counts[i]}});
  }
  Json totals = Json::array();
  Integer power = 1;
  for (unsigned k = 0; k <= k_max; ++k) {
    totals.push_back(power.get_str());
    power *= static_cast<unsigned long>(partition.rank());
  }
  return {{"k_max", k_max}, {"parts", parts}, {"totals", totals}};
}

Analysis analyze(const CosetPartition& partition, const AnalyzeOptions& options) {
  Analysis out;
  Json& r = out.report;
  const auto& parts = partition.parts();
  const auto n = static_cast<unsigned>(partition.rank());

  unsigned h = 1;
  for (const auto& p : parts) h = std::max(h, p.period);

  std::vector<RationalFunction> gfs;
  Json part_blocks = Json::array();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const CosetPart& p = parts[i];
    gfs.push_back(part_generating_function(p));
    const RationalFunction& f = gfs.back();
    Json series = Json::array();
    for (const auto& c : series_coefficients(f, options.k_max)) series.push_back(rational_text(c));
    Json block = {{"part", i + 1},
                  {"rep", word_json(p.rep)},
                  {"index", p.index},
                  {"period", p.period},
                  {"offset", p.offset},
                  {"denominator", poly_json(f.denominator)},
                  {"numerator", poly_json(f.numerator)},
                  {"series", series},
                  {"residue_at_1_over_n", rational_text(residue_at_pole(f, n, 1, 0).rational_value())}};
    if (h > 1) {
      if (p.period == h) {
        Json res = Json::array();
        for (unsigned l = 1; l < h; ++l) {
          if (std::gcd(l, h) != 1) continue;
          res.push_back({{"l", l}, {"value", cyc_json(residue_at_pole(f, n, h, l))}});
        }
        block["residues_at_omega_over_n"] = res;
      } else {
        // No pole at omega / n for parts of smaller period.
        const bool pole = eval_poly(f.denominator, Rational(1, n), h, 1).is_zero();
        if (pole) {
          throw Error(ErrorCode::StructureViolation,
                      "part " + std::to_string(i + 1) + " of period " + std::to_string(p.period) +
                          " has a pole at omega/n");
        }
        block["pole_at_omega_over_n"] = false;
      }
    }
    part_blocks.push_back(std::move(block));
  }

  r["alphabet"] = alphabet_json(partition.alphabet());
  r["rank"] = n;
  r["parts"] = part_blocks;
  r["h"] = h;
  r["k_max"] = options.k_max;
  r["sum_check"] = sum_check(partition, options.k_max);

  if (h == 1) {
    r["J"] = Json::array();
    r["multiplicity"] = "not-applicable";
    return out;
  }

  const VanishingSum sum = induced_sum(partition);
  Json members = Json::array();
  Json terms = Json::array();
  std::string text;
  for (const auto& t : sum.terms) {
    members.push_back(t.part + 1);
    terms.push_back({{"j", t.part + 1}, {"coeff", t.coeff.get_str()}, {"m", t.offset}, {"exponent", t.exponent}});
    if (!text.empty()) text += " + ";
    text += t.coeff.get_str() + (t.offset == 0 ? "" : t.offset == 1 ? "*w" : "*w^" + std::to_string(t.offset));
  }
  Json residues = Json::array();
  for (const auto& res : sum.residues) residues.push_back(cyc_json(res));
  r["J"] = members;
  r["vanishing_sum"] = {{"h", h}, {"terms", terms}, {"text", text + " = 0"}, {"residues", residues}};

  const SubsumAnalysis subs = minimal_vanishing_subsets(sum, options.max_terms);
  std::vector<PolygonRecord> polygons;
  Json subsets = Json::array();
  Json polygon_blocks = Json::array();
  for (std::size_t s = 0; s < subs.minimal.size(); ++s) {
    const IrreducibleSubsum& sub = subs.minimal[s];
    Json parts_of = Json::array();
    Json coeffs = Json::array();
    Json prim = Json::array();
    for (std::size_t t = 0; t < sub.terms.size(); ++t) {
      parts_of.push_back(sub.terms[t].part + 1);
      coeffs.push_back(sub.terms[t].coeff.get_str());
      prim.push_back(sub.primitive_coeffs[t].get_str());
    }
    std::string structure;
    try {
      structure = std::string(to_string(structure_check(sub, h)));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::StructureViolation) throw;
      structure = "StructureViolation";
      out.violations.push_back(e.what());
    }
    subsets.push_back({{"parts", parts_of},
                       {"coeffs", coeffs},
                       {"primitive_coeffs", prim},
                       {"degenerate", sub.degenerate},
                       {"length", sub.length()},
                       {"directions", sub.distinct_directions()},
                       {"lam_leung", lam_leung_length_check(sub.distinct_directions(), h)},
                       {"structure", structure},
                       {"cyclotomic_divisibility", cyclotomic_divisibility(sub, h)}});

    PolygonRecord poly = build_polygon(sub);
    Json edges = Json::array();
    for (const auto& e : poly.edges) edges.push_back({{"part", e.part + 1}, {"length", e.length.get_str()}, {"direction", e.direction}});
    Json vertices = Json::array();
    for (const auto& v : poly.vertices) {
      vertices.push_back({{"exact", cyc_json(v.exact)}, {"re", cyc_json(v.re)}, {"i_im", cyc_json(v.im_times_i)}});
    }
    Json pairs = Json::array();
    for (auto [a, b] : poly.equal_edge_pairs) pairs.push_back({a + 1, b + 1});
    Json block = {{"subset", s + 1},
                  {"h", poly.h},
                  {"edges", edges},
                  {"vertices", vertices},
                  {"degenerate", poly.degenerate},
                  {"regular", poly.regular},
                  {"equal_edge_pairs", pairs}};
    if (!options.svg_dir.empty()) {
      std::filesystem::create_directories(options.svg_dir);
      const std::string name = "polygon_" + std::to_string(s + 1) + ".svg";
      render_svg(poly, (std::filesystem::path(options.svg_dir) / name).string());
      block["svg"] = name;
    }
    polygon_blocks.push_back(std::move(block));
    polygons.push_back(std::move(poly));
  }
  r["minimal_subsets"] = subsets;
  r["decomposition"] = Json::array();
  for (std::size_t i : subs.decomposition) r["decomposition"].push_back(i + 1);
  r["polygons"] = polygon_blocks;

  const MultiplicityVerdict v = multiplicity_verdict(partition, polygons);
  r["multiplicity"] = v.proven ? "proven" : "not-detected";
  if (v.proven) r["multiplicity_witness"] = {{"parts", {v.j + 1, v.k + 1}}, {"index", v.index}};
  r["equal_index_scan"] = v.global_pair ? Json{v.global_pair->first + 1, v.global_pair->second + 1} : Json(nullptr);
  r["structure_violations"] = out.violations;
  return out;
}

}  // namespace hsgon
