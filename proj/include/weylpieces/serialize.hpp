#ifndef WEYLPIECES_SERIALIZE_HPP
#define WEYLPIECES_SERIALIZE_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "index_set.hpp"
#include "oracle.hpp"
#include "piece_maps.hpp"
#include "pieces.hpp"
#include "properties.hpp"
#include "rootsys.hpp"
#include "twisted.hpp"
#include "weyl.hpp"

namespace weylpieces::json
{

using nlohmann::json;

inline constexpr char const *version = "weylpieces/1";

inline json word(WeylElement const &w) { return reduced_word(w); }

inline json words(std::vector<WeylElement> const &ws)
{
  json out = json::array();
  for (auto const &w : ws)
    out.push_back(word(w));
  return out;
}

inline json index_set(IndexSet J) { return J.labels(); }

inline json matrix(IntMatrix const &m) { return m; }

inline json sequence(BedardSequence const &seq)
{
  json steps = json::array();
  for (auto const &s : seq.steps)
    steps.push_back({{"J", index_set(s.J)}, {"w", word(s.w)}});
  return steps;
}

inline json piece(PieceDescriptor const &p)
{
  return {{"J", index_set(p.J)},
          {"w", word(p.w)},
          {"K", index_set(p.K)},
          {"sequence", sequence(p.sequence)}};
}

inline json dual(DualSequence const &d)
{
  return {{"sequence", sequence(d.seq)}, {"Q", words(d.Q)}, {"P", words(d.P)}};
}

inline json epsilon_record(EpsilonCertificate const &c)
{ return {{"w", word(c.w)}, {"v", word(c.v)}, {"witness", word(c.witness)}}; }

inline json classify_trace(ClassifyTrace const &t)
{
  json steps = json::array();
  for (auto const &s : t.steps)
    steps.push_back({{"J", index_set(s.J)}, {"w", word(s.w)}, {"u", word(s.u)}});
  return {{"a", word(t.a)}, {"b", word(t.b)}, {"steps", steps}, {"result", word(t.result)}};
}

inline json twisted_solution(TwistedSolution const &s)
{
  return {{"w", word(s.w)},
          {"K", index_set(s.K)},
          {"solutions", words(s.solutions)},
          {"u", word(s.distinguished)}};
}

inline json support_scan(oracle::SupportScanReport const &r)
{
  json cex = json::array();
  for (auto const &c : r.counterexamples)
    cex.push_back({{"x", word(c.x)}, {"w", word(c.w)}, {"u", word(c.u)}, {"v", word(c.v)}});
  return {{"scanned", r.scanned}, {"premises", r.premises_satisfied}, {"counterexamples", cex}};
}

inline json property(properties::PropertyResult const &r)
{
  json out = {{"system", r.system},
              {"property", r.name},
              {"cases", r.cases},
              {"failures", r.failures},
              {"skipped", r.skipped}};
  if (!r.first_failure.empty())
    out["first_failure"] = r.first_failure;
  return out;
}

/// Reading back. Malformed input is a configuration error.

inline Word read_word(json const &j)
{
  if (!j.is_array())
    throw SpecError("expected a word (array of integers)");
  Word w;
  for (auto const &x : j) {
    if (!x.is_number_integer())
      throw SpecError("word letters must be integers");
    w.push_back(x.get<int>());
  }
  return w;
}

inline IndexSet read_index_set(json const &j, int rank)
{
  if (!j.is_array())
    throw SpecError("expected an index set (array of labels)");
  std::vector<int> labels;
  for (auto const &x : j) {
    if (!x.is_number_integer())
      throw SpecError("index labels must be integers");
    labels.push_back(x.get<int>());
  }
  return IndexSet::from_labels(labels, rank);
}

inline IntMatrix read_matrix(json const &j)
{
  if (!j.is_array())
    throw SpecError("expected a matrix (array of rows)");
  IntMatrix m;
  for (auto const &row : j) {
    if (!row.is_array())
      throw SpecError("matrix rows must be arrays");
    std::vector<int> r;
    for (auto const &x : row) {
      if (!x.is_number_integer())
        throw SpecError("matrix entries must be integers");
      r.push_back(x.get<int>());
    }
    m.push_back(std::move(r));
  }
  return m;
}

inline json const &field(json const &j, char const *key)
{
  if (!j.is_object() || !j.contains(key))
    throw SpecError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

} // namespace weylpieces::json

#endif // WEYLPIECES_SERIALIZE_HPP
