#ifndef WEYLPIECES_CONFIG_HPP
#define WEYLPIECES_CONFIG_HPP

// Text formats shared by the command-line tool and the tests.

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "index_set.hpp"
#include "rootsys.hpp"
#include "serialize.hpp"
#include "twisted.hpp"
#include "weyl.hpp"

namespace weylpieces::config
{

inline std::string trim(std::string_view s)
{
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
    ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
    --e;
  return std::string(s.substr(b, e - b));
}

/// "1,2,3" -> {1,2,3}. Empty text, "e" and "none" give the empty list.
inline std::vector<int> parse_int_list(std::string_view text)
{
  std::string const t = trim(text);
  std::vector<int> out;
  if (t.empty() || t == "e" || t == "none")
    return out;
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty())
      throw SpecError("empty entry in list '" + t + "'");
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (std::exception const &) {
      throw SpecError("'" + item + "' is not an integer");
    }
    if (used != item.size())
      throw SpecError("'" + item + "' is not an integer");
    out.push_back(v);
  }
  return out;
}

inline Word parse_word(std::string_view text) { return parse_int_list(text); }

/// Index subset from labels; "all" is the full set I.
inline IndexSet parse_index_set(std::string_view text, int rank)
{
  if (trim(text) == "all")
    return IndexSet::full(rank);
  return IndexSet::from_labels(parse_int_list(text), rank);
}

inline std::string read_file(std::string const &path)
{
  std::ifstream in(path);
  if (!in)
    throw SpecError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Whitespace-separated integer rows, one per non-empty line.
inline IntMatrix parse_matrix_text(std::string const &text)
{
  IntMatrix m;
  std::stringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.resize(hash);
    if (trim(line).empty())
      continue;
    std::stringstream row(line);
    std::vector<int> r;
    std::string tok;
    while (row >> tok) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &used);
      } catch (std::exception const &) {
        throw SpecError("matrix entry '" + tok + "' is not an integer");
      }
      if (used != tok.size())
        throw SpecError("matrix entry '" + tok + "' is not an integer");
      r.push_back(v);
    }
    m.push_back(std::move(r));
  }
  return m;
}

/// Automorphism file: line i lists the image of alpha_i in simple-root
/// coordinates, so the lines are the columns of the matrix.
inline IntMatrix automorphism_matrix_from_text(std::string const &text, int rank)
{
  IntMatrix lines = parse_matrix_text(text);
  if (static_cast<int>(lines.size()) != rank)
    throw AutomorphismError("automorphism file needs " + std::to_string(rank) + " lines");
  IntMatrix m(rank, std::vector<int>(rank));
  for (int i = 0; i < rank; ++i) {
    if (static_cast<int>(lines[i].size()) != rank)
      throw AutomorphismError("automorphism file line " + std::to_string(i + 1) + " needs " +
                              std::to_string(rank) + " entries");
    for (int r = 0; r < rank; ++r)
      m[r][i] = lines[i][r];
  }
  return m;
}

/// Root system from a Cartan matrix file (rows of integers).
inline RootSystemPtr root_system_from_file(std::string const &path)
{ return root_system_from_cartan(parse_matrix_text(read_file(path))); }

inline RootAutomorphism named_automorphism(RootSystemPtr const &rs, std::string const &name)
{
  if (name == "id")
    return identity_automorphism(rs);
  if (name == "neg")
    return validate_automorphism(rs, negation_matrix(rs->rank()));
  if (name == "flip")
    return canonical_flip(rs);
  if (name == "productSwap")
    return product_swap(rs);
  if (!name.empty() && name[0] == '@')
    return validate_automorphism(
        rs, automorphism_matrix_from_text(read_file(name.substr(1)), rs->rank()));
  throw AutomorphismError("unknown automorphism '" + name +
                          "' (expected id, flip, neg, productSwap or @FILE)");
}

/// Named automorphisms joined by '*' compose right to left: "neg*flip" is
/// neg o flip.
inline RootAutomorphism parse_automorphism(RootSystemPtr const &rs, std::string_view text)
{
  std::string const t = trim(text);
  if (t.empty())
    throw AutomorphismError("empty automorphism spec");
  std::vector<std::string> parts;
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, '*'))
    parts.push_back(trim(item));
  RootAutomorphism out = named_automorphism(rs, parts.back());
  for (std::size_t i = parts.size() - 1; i-- > 0;)
    out = aut_compose(named_automorphism(rs, parts[i]), out);
  return out;
}

/// {"version": "weylpieces/1", "sets": [{"J": [1], "elements": [[], [1]]}]}
inline JOracle custom_oracle_from_json(nlohmann::json const &doc, int rank)
{
  std::map<IndexSet, std::vector<Word>> sets;
  for (auto const &entry : json::field(doc, "sets")) {
    IndexSet J = json::read_index_set(json::field(entry, "J"), rank);
    std::vector<Word> words;
    for (auto const &w : json::field(entry, "elements"))
      words.push_back(json::read_word(w));
    if (!sets.emplace(J, std::move(words)).second)
      throw SpecError("custom J-oracle lists J = " + J.to_string() + " twice");
  }
  return JOracle::custom(std::move(sets));
}

/// full | doubled | custom:FILE
inline JOracle parse_j_oracle(RootSystemPtr const &rs, std::string const &text)
{
  if (text == "full")
    return JOracle::full();
  if (text == "doubled")
    return doubled_j_oracle(rs);
  if (text.rfind("custom:", 0) == 0) {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(read_file(text.substr(7)));
    } catch (nlohmann::json::exception const &e) {
      throw SpecError(std::string("custom J-oracle file: ") + e.what());
    }
    return custom_oracle_from_json(doc, rs->rank());
  }
  throw SpecError("unknown J-oracle '" + text + "' (expected full, doubled or custom:FILE)");
}

} // namespace weylpieces::config

#endif // WEYLPIECES_CONFIG_HPP
