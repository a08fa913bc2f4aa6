#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <weylpieces/config.hpp>
#include <weylpieces/properties.hpp>
#include <weylpieces/serialize.hpp>
#include <weylpieces/weylpieces.hpp>

namespace wp = weylpieces;
using nlohmann::json;

namespace
{

int exit_code(wp::ErrorClass c)
{
  switch (c) {
  case wp::ErrorClass::config: return 2;
  case wp::ErrorClass::guard: return 3;
  case wp::ErrorClass::contract: return 4;
  }
  return 4;
}

struct Options
{
  std::string type;
  std::string J = "";
  std::string delta = "id";
  std::string sigma = "neg";
  std::string tau = "neg";
  std::string joracle = "full";
  std::string w;
  bool have_w = false;
  std::string format = "pretty";
  std::uint64_t guard = wp::default_guard;
  bool verbose = false;
  bool no_levi = false;
  std::string replay;
  std::string families = "A,B,C,D,G";
  int max_rank = 3;
  std::string types;
  std::string cartan_file;
};

/// Rows of strings, printed as CSV or as an aligned table.
struct Table
{
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> rows;
};

std::string join(std::vector<int> const &v, char const *sep = " ")
{
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i)
      s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

bool g_pretty = false;

/// CSV flattens words and sets to space-joined integers; the pretty table
/// uses s1s2 / {1,2} so that e and the empty set stay visible.
std::string word_cell(wp::WeylElement const &w)
{ return g_pretty ? wp::to_string(w) : join(wp::reduced_word(w)); }

std::string set_cell(wp::IndexSet J) { return g_pretty ? J.to_string() : join(J.labels()); }

std::string csv_cell(std::string const &s)
{
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"')
      q += '"';
    q += c;
  }
  return q + "\"";
}

void print_csv(Table const &t)
{
  auto line = [](std::vector<std::string> const &cells) {
    for (std::size_t i = 0; i < cells.size(); ++i)
      std::cout << (i ? "," : "") << csv_cell(cells[i]);
    std::cout << "\n";
  };
  line(t.headers);
  for (auto const &r : t.rows)
    line(r);
}

void print_pretty(Table const &t, std::string const &title)
{
  std::vector<std::size_t> width(t.headers.size());
  for (std::size_t c = 0; c < t.headers.size(); ++c) {
    width[c] = t.headers[c].size();
    for (auto const &r : t.rows)
      width[c] = std::max(width[c], r[c].size());
  }
  auto line = [&](std::vector<std::string> const &cells) {
    std::string s;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      s += cells[c];
      if (c + 1 < cells.size())
        s += std::string(width[c] - cells[c].size() + 2, ' ');
    }
    std::cout << s << "\n";
  };
  if (!title.empty())
    std::cout << title << "\n";
  line(t.headers);
  std::vector<std::string> rule;
  for (auto w : width)
    rule.push_back(std::string(w, '-'));
  line(rule);
  for (auto const &r : t.rows)
    line(r);
}

void emit(Options const &o, json const &doc, Table const &t, std::string const &title)
{
  if (o.format == "json")
    std::cout << doc.dump(2) << "\n";
  else if (o.format == "csv")
    print_csv(t);
  else
    print_pretty(t, title);
}

/// Everything derived from the common flags.
struct Context
{
  wp::RootSystemPtr rs;
  wp::IndexSet J;
  std::optional<wp::RootAutomorphism> delta;
};

Context make_context(Options const &o)
{
  if (o.type.empty())
    throw wp::SpecError("--type is required");
  Context c;
  c.rs = wp::build_root_system(o.type);
  c.J = wp::config::parse_index_set(o.J, c.rs->rank());
  c.delta = wp::config::parse_automorphism(c.rs, o.delta);
  if (!c.delta->is_diagram())
    throw wp::PreconditionError("--delta must permute the simple roots");
  return c;
}

json header(std::string const &command, Context const &c)
{
  return {{"version", wp::json::version},
          {"command", command},
          {"type", c.rs->name()},
          {"J", wp::json::index_set(c.J)},
          {"delta", wp::json::matrix(c.delta->matrix())}};
}

wp::WeylElement require_word(Options const &o, Context const &c, char const *flag)
{
  if (!o.have_w)
    throw wp::SpecError(std::string(flag) + " is required");
  return wp::from_word(c.rs, wp::config::parse_word(o.w));
}

std::string seq_text(wp::BedardSequence const &s)
{
  std::string out;
  for (auto const &step : s.steps) {
    if (!out.empty())
      out += " ; ";
    out += step.J.to_string() + " " + wp::to_string(step.w);
  }
  return out;
}

int replay(Options const &o)
{
  json doc;
  try {
    doc = json::parse(wp::config::read_file(o.replay));
  } catch (json::exception const &e) {
    throw wp::SpecError(std::string("replay file: ") + e.what());
  }
  if (wp::json::field(doc, "version") != wp::json::version)
    throw wp::SpecError("replay file has unsupported version");
  if (wp::json::field(doc, "command") != "enumerate")
    throw wp::SpecError("replay expects output of the enumerate command");

  auto rs = wp::build_root_system(wp::json::field(doc, "type").get<std::string>());
  wp::IndexSet J = wp::json::read_index_set(wp::json::field(doc, "J"), rs->rank());
  auto delta = wp::validate_automorphism(rs, wp::json::read_matrix(wp::json::field(doc, "delta")));

  auto const expected = wp::enumerate_pieces(rs, J, delta, o.guard);
  auto const &records = wp::json::field(doc, "records");
  if (records.size() != expected.size())
    throw wp::ContractViolation("replay: " + std::to_string(records.size()) + " records, expected " +
                                std::to_string(expected.size()));
  for (std::size_t i = 0; i < records.size(); ++i) {
    auto const &rec = records[i];
    auto w = wp::from_word(rs, wp::json::read_word(wp::json::field(rec, "w")));
    if (!(w == expected[i].w))
      throw wp::ContractViolation("replay: record " + std::to_string(i) + " out of order or wrong");
    if (wp::json::piece(expected[i]) != rec)
      throw wp::ContractViolation("replay: record " + std::to_string(i) + " (w = " +
                                  wp::to_string(w) + ") does not re-validate");
  }

  json out = {{"version", wp::json::version},
              {"command", "replay"},
              {"type", rs->name()},
              {"J", wp::json::index_set(J)},
              {"records", records.size()},
              {"valid", true}};
  Table t{{"records", "valid"}, {{std::to_string(records.size()), "true"}}};
  emit(o, out, t, "replay " + o.replay);
  return 0;
}

int cmd_enumerate(Options const &o)
{
  if (!o.replay.empty())
    return replay(o);
  Context c = make_context(o);
  auto pieces = wp::enumerate_pieces(c.rs, c.J, *c.delta, o.guard);

  json doc = header("enumerate", c);
  doc["records"] = json::array();
  Table t{{"w", "K", "stable_index"}, {}};
  if (o.verbose)
    t.headers.push_back("sequence");
  for (auto const &p : pieces) {
    doc["records"].push_back(wp::json::piece(p));
    std::vector<std::string> row{word_cell(p.w), set_cell(p.K), std::to_string(p.sequence.stable_index)};
    if (o.verbose)
      row.push_back(seq_text(p.sequence));
    t.rows.push_back(row);
  }
  emit(o, doc, t, c.rs->name() + " J=" + c.J.to_string() + ": " + std::to_string(pieces.size()) + " pieces");
  return 0;
}

int cmd_bedard(Options const &o)
{
  Context c = make_context(o);
  auto w = require_word(o, c, "--w");
  wp::PieceDescriptor p{c.J, w, wp::i_set(c.J, *c.delta, w), wp::bedard_sequence(c.J, *c.delta, w)};

  json doc = header("bedard", c);
  doc["records"] = json::array({wp::json::piece(p)});
  Table t{{"n", "J_n", "w_n"}, {}};
  for (std::size_t n = 0; n < p.sequence.steps.size(); ++n)
    t.rows.push_back({std::to_string(n), set_cell(p.sequence.steps[n].J), word_cell(p.sequence.steps[n].w)});
  emit(o, doc, t, "w=" + wp::to_string(w) + " K=" + p.K.to_string());
  return 0;
}

int cmd_epsilon(Options const &o)
{
  Context c = make_context(o);
  auto w = require_word(o, c, "--w");
  auto res = wp::epsilon(c.J, *c.delta, w);
  auto cert = wp::epsilon_oracle(c.J, *c.delta, w);
  if (!(cert.v == res.v))
    throw wp::ContractViolation("epsilon and its scan disagree at " + wp::to_string(w));

  json rec = wp::json::epsilon_record(cert);
  if (o.verbose)
    rec["dual"] = wp::json::dual(res.dual);
  json doc = header("epsilon", c);
  doc["records"] = json::array({rec});
  Table t{{"w", "v", "witness"}, {{word_cell(w), word_cell(res.v), word_cell(cert.witness)}}};
  if (o.verbose) {
    t.headers.push_back("dual_sequence");
    t.rows[0].push_back(seq_text(res.dual.seq));
  }
  emit(o, doc, t, "");
  return 0;
}

int cmd_classify(Options const &o)
{
  Context c = make_context(o);
  auto x = require_word(o, c, "--x");
  auto tr = wp::classify_trace(c.J, *c.delta, x);

  json rec = {{"x", wp::json::word(x)}, {"result", wp::json::word(tr.result)}};
  if (o.verbose)
    rec["trace"] = wp::json::classify_trace(tr);
  json doc = header("classify", c);
  doc["records"] = json::array({rec});
  Table t{{"x", "result"}, {{word_cell(x), word_cell(tr.result)}}};
  if (o.verbose) {
    t = Table{{"n", "J_n", "w_n", "u_n"}, {}};
    for (std::size_t n = 0; n < tr.steps.size(); ++n)
      t.rows.push_back({std::to_string(n), set_cell(tr.steps[n].J), word_cell(tr.steps[n].w),
                        word_cell(tr.steps[n].u)});
  }
  emit(o, doc, t, "classify(" + wp::to_string(x) + ") = " + wp::to_string(tr.result));
  return 0;
}

int cmd_wset(Options const &o)
{
  if (o.type.empty())
    throw wp::SpecError("--type is required");
  auto rs = wp::build_root_system(o.type);
  wp::IndexSet J = wp::config::parse_index_set(o.J, rs->rank());
  auto pair = wp::make_involution_pair(wp::config::parse_automorphism(rs, o.sigma),
                                       wp::config::parse_automorphism(rs, o.tau));
  auto oracle = wp::config::parse_j_oracle(rs, o.joracle);
  auto sols = wp::w_set(J, pair, oracle, oracle, o.guard);

  json doc = {{"version", wp::json::version},
              {"command", "wset"},
              {"type", rs->name()},
              {"J", wp::json::index_set(J)},
              {"sigma", wp::json::matrix(pair.sigma.matrix())},
              {"tau", wp::json::matrix(pair.tau.matrix())},
              {"delta", wp::json::matrix(pair.delta.matrix())},
              {"joracle", oracle.name()},
              {"records", json::array()}};
  Table t{{"w", "K", "u"}, {}};
  if (o.verbose)
    t.headers.push_back("solutions");
  for (auto const &s : sols) {
    doc["records"].push_back(wp::json::twisted_solution(s));
    std::vector<std::string> row{word_cell(s.w), set_cell(s.K), word_cell(s.distinguished)};
    if (o.verbose) {
      std::string all;
      for (auto const &a : s.solutions)
        all += (all.empty() ? "" : " ; ") + wp::to_string(a);
      row.push_back(all);
    }
    t.rows.push_back(row);
  }
  emit(o, doc, t, rs->name() + " J=" + J.to_string() + ": " + std::to_string(sols.size()) + " elements");
  return 0;
}

int cmd_wp(Options const &o)
{
  Context c = make_context(o);
  auto sigma = wp::config::parse_automorphism(c.rs, o.sigma);
  wp::WpOptions opts;
  opts.check_levi = !o.no_levi;

  std::vector<wp::WeylElement> inputs;
  if (o.have_w)
    inputs.push_back(wp::from_word(c.rs, wp::config::parse_word(o.w)));
  else
    inputs = wp::enumerate_min_reps(c.rs, c.delta->on_set(c.J), wp::Side::right, o.guard);

  json doc = header("wp", c);
  doc["sigma"] = wp::json::matrix(sigma.matrix());
  doc["records"] = json::array();
  Table t{{"w", "image"}, {}};
  for (auto const &w : inputs) {
    auto image = wp::wp(c.J, *c.delta, sigma, w, opts);
    doc["records"].push_back({{"w", wp::json::word(w)}, {"image", wp::json::word(image)}});
    t.rows.push_back({word_cell(w), word_cell(image)});
  }
  emit(o, doc, t, "");
  return 0;
}

std::vector<std::string> selftest_types(Options const &o)
{
  std::vector<std::string> out;
  if (!o.types.empty()) {
    std::stringstream ss(o.types);
    std::string item;
    while (std::getline(ss, item, ','))
      out.push_back(wp::config::trim(item));
    return out;
  }
  std::stringstream ss(o.families);
  std::string fam;
  while (std::getline(ss, fam, ',')) {
    fam = wp::config::trim(fam);
    if (fam.size() != 1)
      throw wp::SpecError("family '" + fam + "' is not a single letter");
    char f = static_cast<char>(std::toupper(static_cast<unsigned char>(fam[0])));
    if (std::string("ABCDEFG").find(f) == std::string::npos)
      throw wp::SpecError("unknown family '" + fam + "'");
    for (int r = 1; r <= o.max_rank; ++r) {
      try {
        wp::validate_factor({f, r});
      } catch (wp::SpecError const &) {
        continue;
      }
      // D2 and D3 repeat A1xA1 and A3; B2 and C2 coincide up to relabeling
      if ((f == 'D' && r < 4) || (f == 'C' && r == 2))
        continue;
      out.push_back(std::string(1, f) + std::to_string(r));
    }
  }
  return out;
}

int cmd_selftest(Options const &o)
{
  std::vector<wp::RootSystemPtr> systems;
  if (!o.cartan_file.empty())
    systems.push_back(wp::config::root_system_from_file(o.cartan_file));
  else
    for (auto const &t : selftest_types(o))
      systems.push_back(wp::build_root_system(t));

  std::vector<wp::properties::PropertyResult> results;
  for (auto const &rs : systems)
    for (auto &r : wp::properties::run_all(rs, o.guard))
      results.push_back(std::move(r));

  std::uint64_t cases = 0, failures = 0;
  std::size_t exercised = 0, skipped = 0;
  std::optional<wp::properties::PropertyResult> first_failure;
  json list = json::array();
  Table t{{"system", "property", "cases", "failures", "status"}, {}};
  for (auto const &r : results) {
    cases += r.cases;
    failures += r.failures;
    exercised += r.cases > 0 ? 1 : 0;
    skipped += r.skipped ? 1 : 0;
    if (!r.passed() && !first_failure)
      first_failure = r;
    list.push_back(wp::json::property(r));
    t.rows.push_back({r.system, r.name, std::to_string(r.cases), std::to_string(r.failures),
                      !r.passed() ? "FAIL" : r.skipped ? "skipped" : "ok"});
  }

  std::vector<std::string> names;
  for (auto const &rs : systems)
    names.push_back(rs->name());
  json doc = {{"version", wp::json::version},
              {"command", "selftest"},
              {"systems", names},
              {"properties_run", results.size()},
              {"properties_exercised", exercised},
              {"skipped", skipped},
              {"cases", cases},
              {"failures", failures},
              {"passed", failures == 0},
              {"results", list}};
  emit(o, doc, t, "");

  if (first_failure) {
    std::cerr << "selftest: property " << first_failure->name << " failed on " << first_failure->system
              << ": " << first_failure->first_failure << "\n";
    return 4;
  }
  return 0;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Weyl group combinatorics of stable pieces"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App *sub) {
    sub->add_option("--type", o.type, "Cartan type, e.g. A2 or A2xA2");
    sub->add_option("--J", o.J, "index subset as a comma list of labels, or 'all'");
    sub->add_option("--delta", o.delta, "diagram automorphism: id, flip, neg, productSwap, @FILE");
    sub->add_option("--format", o.format, "json, csv or pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
    sub->add_option("--guard", o.guard, "largest |W| that may be enumerated");
    sub->add_flag("--verbose", o.verbose, "include sequences, certificates and traces");
  };

  auto *enumerate = app.add_subcommand("enumerate", "list the pieces for (J, delta)");
  add_common(enumerate);
  enumerate->add_option("--replay", o.replay, "re-validate a JSON file written by enumerate");

  auto *bedard = app.add_subcommand("bedard", "Bedard sequence with limit w");
  add_common(bedard);
  bedard->add_option("--w", o.w, "word as comma list")->each([&](std::string const &) { o.have_w = true; });

  auto *eps = app.add_subcommand("epsilon", "the map W^delta(J) -> W^J");
  add_common(eps);
  eps->add_option("--w", o.w, "word as comma list")->each([&](std::string const &) { o.have_w = true; });

  auto *cls = app.add_subcommand("classify", "piece containing the orbit of x");
  add_common(cls);
  cls->add_option("--x", o.w, "word as comma list")->each([&](std::string const &) { o.have_w = true; });

  auto *wset = app.add_subcommand("wset", "twisted piece indices with distinguished elements");
  add_common(wset);
  wset->add_option("--sigma", o.sigma, "involution sigma");
  wset->add_option("--tau", o.tau, "involution tau");
  wset->add_option("--joracle", o.joracle, "full, doubled or custom:FILE");

  auto *wpc = app.add_subcommand("wp", "involution on piece indices induced by sigma");
  add_common(wpc);
  wpc->add_option("--sigma", o.sigma, "involution sigma");
  wpc->add_option("--w", o.w, "word as comma list (default: all of W^delta(J))")
      ->each([&](std::string const &) { o.have_w = true; });
  wpc->add_flag("--no-levi", o.no_levi, "skip the sigma(Phi_J) = Phi_delta(J) check");

  auto *self = app.add_subcommand("selftest", "run every property suite");
  self->add_option("--families", o.families, "comma list of family letters");
  self->add_option("--max-rank", o.max_rank, "largest rank per family");
  self->add_option("--types", o.types, "explicit comma list of types, overrides --families");
  self->add_option("--cartan", o.cartan_file, "run on the Cartan matrix in FILE");
  self->add_option("--format", o.format, "json, csv or pretty")
      ->check(CLI::IsMember({"json", "csv", "pretty"}));
  self->add_option("--guard", o.guard, "largest |W| that may be enumerated");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  g_pretty = o.format == "pretty";

  try {
    if (*enumerate)
      return cmd_enumerate(o);
    if (*bedard)
      return cmd_bedard(o);
    if (*eps)
      return cmd_epsilon(o);
    if (*cls)
      return cmd_classify(o);
    if (*wset)
      return cmd_wset(o);
    if (*wpc)
      return cmd_wp(o);
    if (*self)
      return cmd_selftest(o);
  } catch (wp::Error const &e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.error_class());
  } catch (json::exception const &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (std::exception const &e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 2;
}
