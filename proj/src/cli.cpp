#include "wordlab/cli.hpp"

#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wordlab/bounds.hpp"
#include "wordlab/divisibility.hpp"
#include "wordlab/enumeration.hpp"
#include "wordlab/height.hpp"
#include "wordlab/poset.hpp"
#include "wordlab/search.hpp"
#include "wordlab/selftest.hpp"
#include "wordlab/thue.hpp"
#include "wordlab/word.hpp"

namespace wordlab {

namespace {

using nlohmann::json;

int infer_alphabet(const std::string& text) {
  int max_index = 0;
  bool numeric = !text.empty() &&
                 text.find_first_not_of("0123456789,") == std::string::npos;
  if (numeric) {
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
      max_index = std::max(max_index, std::stoi(item));
  } else {
    for (char c : text)
      if (c >= 'a' && c <= 'z') max_index = std::max(max_index, c - 'a');
  }
  return max_index + 1;
}

Word parse_word_arg(const std::string& text, int l) {
  if (l == 0) l = text.empty() ? 1 : infer_alphabet(text);
  return Word::parse(text, l);
}

std::vector<Word> parse_word_list(const std::string& text, int l) {
  std::vector<std::string> items;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) items.push_back(item);
  if (l == 0)
    for (const std::string& s : items) l = std::max(l, infer_alphabet(s));
  std::vector<Word> words;
  for (const std::string& s : items) words.push_back(Word::parse(s, l));
  return words;
}

// One result row rendered as an aligned table, a CSV line or a JSON object.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void print(const std::string& format) const {
    if (format == "json") {
      json out = json::array();
      for (const auto& row : rows) {
        json o;
        for (std::size_t i = 0; i < columns.size(); ++i) o[columns[i]] = row[i];
        out.push_back(o);
      }
      std::cout << out.dump() << "\n";
      return;
    }
    if (format == "csv") {
      for (std::size_t i = 0; i < columns.size(); ++i)
        std::cout << columns[i] << (i + 1 < columns.size() ? "," : "\n");
      for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size(); ++i)
          std::cout << row[i] << (i + 1 < row.size() ? "," : "\n");
      return;
    }
    std::vector<std::size_t> width(columns.size());
    for (std::size_t i = 0; i < columns.size(); ++i) width[i] = columns[i].size();
    for (const auto& row : rows)
      for (std::size_t i = 0; i < row.size(); ++i)
        width[i] = std::max(width[i], row[i].size());
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        std::cout << cells[i];
        if (i + 1 < cells.size())
          std::cout << std::string(width[i] - cells[i].size() + 2, ' ');
      }
      std::cout << "\n";
    };
    line(columns);
    for (const auto& row : rows) line(row);
  }
};

json span_json(const Word& w, const Span& s) {
  return {{"start", s.start}, {"len", s.len}, {"word", w.subword(s.start, s.len).str()}};
}

json division_json(const Word& w, const DivisionWitness& witness) {
  json factors = json::array();
  for (const Span& f : witness.factors) factors.push_back(span_json(w, f));
  return {{"prefix", w.subword(0, witness.prefix_len).str()},
          {"prefix_len", witness.prefix_len},
          {"factors", factors}};
}

json occurrences_json(const std::vector<SelectiveOccurrence>& occurrences) {
  json out = json::array();
  for (const auto& o : occurrences)
    out.push_back({{"start", o.start},
                   {"period", o.period.str()},
                   {"exponent", o.exponent}});
  return out;
}

std::string log10_digits(const BoundValue& v) {
  std::ostringstream out;
  out << std::setprecision(50) << v.log10();
  return out.str();
}

struct BoundsQuery {
  int n = 0, d = 0, l = 0, k = 0, period_len = 0;
  bool has_n = false, has_d = false, has_l = false, has_k = false, has_p = false;
};

void add_bounds_row(Table& table, const std::string& name, const BoundsQuery& q) {
  std::ostringstream args;
  std::string value;
  if (name == "psi") {
    args << "n=" << q.n << ",d=" << q.d << ",l=" << q.l;
    value = "log10=" + log10_digits(psi(q.n, q.d, q.l));
  } else if (name == "phi") {
    args << "n=" << q.n << ",l=" << q.l;
    value = "log10=" + log10_digits(phi(q.n, q.l));
  } else if (name == "upsilon") {
    args << "n=" << q.n << ",l=" << q.l;
    value = upsilon(q.n, q.l).exact_value().str();
  } else if (name == "upsilon_prime") {
    args << "n=" << q.n << ",l=" << q.l;
    value = upsilon_prime(q.n, q.l).str();
  } else if (name == "beth2") {
    args << "l=" << q.l << ",n=" << q.n;
    value = beth(2, q.l, q.n).str();
  } else if (name == "beth3") {
    args << "l=" << q.l << ",n=" << q.n;
    value = beth(3, q.l, q.n).str();
  } else if (name == "bethn1") {
    args << "l=" << q.l << ",n=" << q.n;
    value = beth(q.n - 1, q.l, q.n).str();
  } else if (name == "alpha") {
    args << "n=" << q.n << ",l=" << q.l;
    value = alpha_lower(q.n, q.l).str();
  } else if (name == "pnd") {
    args << "n=" << q.n << ",d=" << q.d;
    value = p_nd(q.n, q.d).str();
  } else if (name == "kuzmin") {
    args << "n=" << q.n;
    value = classic_lower_bounds(q.n, std::max(q.l, 2)).kuzmin.str();
  } else if (name == "gk") {
    args << "n=" << q.n << ",l=" << q.l;
    value = rational_to_string(classic_lower_bounds(q.n, q.l).gk_height);
  } else if (name == "xi_upper") {
    args << "k=" << q.k << ",n=" << q.n;
    value = rational_to_string(xi_upper(q.k, q.n));
  } else if (name == "epsilon_upper") {
    args << "k=" << q.k << ",n=" << q.n;
    value = rational_to_string(epsilon_upper(q.k, q.n));
  } else if (name == "lopatin") {
    args << "n=" << q.n << ",l=" << q.l;
    BoundValue v = lopatin_cnl(q.n, q.l);
    value = v.is_exact() ? v.exact_value().str() : "log10=" + log10_digits(v);
  } else {
    throw std::invalid_argument("unknown formula: " + name);
  }
  table.rows.push_back({name, args.str(), value});
}

Morphism parse_morphism(const std::string& text, int target_l) {
  std::vector<std::pair<int, std::string>> entries;
  std::istringstream in(text);
  std::string item;
  int max_source = -1, max_target = -1;
  while (std::getline(in, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq != 1 || item[0] < 'a' || item[0] > 'z')
      throw std::invalid_argument("morphism entries look like letter=image");
    int src = item[0] - 'a';
    std::string image = item.substr(eq + 1);
    for (char c : image) {
      if (c < 'a' || c > 'z') throw std::invalid_argument("bad image letter");
      max_target = std::max(max_target, c - 'a');
    }
    max_source = std::max(max_source, src);
    entries.emplace_back(src, image);
  }
  Morphism m;
  m.source_size = max_source + 1;
  m.target_size = target_l > 0 ? target_l : max_target + 1;
  m.images.assign(m.source_size, Word());
  std::vector<bool> seen(m.source_size, false);
  for (auto& [src, image] : entries) {
    if (seen[src]) throw std::invalid_argument("duplicate image for a letter");
    seen[src] = true;
    m.images[src] = Word::parse(image, m.target_size);
  }
  for (bool s : seen)
    if (!s) throw std::invalid_argument("missing image for a source letter");
  m.validate();
  return m;
}

int print_report(const SearchReport& report, const std::string& format,
                 bool timing) {
  if (format == "table") {
    json j = report.to_json(timing);
    for (auto& [key, value] : j.items())
      std::cout << key << "  " << (value.is_string() ? value.get<std::string>()
                                                     : value.dump())
                << "\n";
  } else {
    std::cout << report.to_json(timing).dump() << "\n";
  }
  return report.violated() ? 2 : 0;
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"combinatorics-on-words laboratory"};
  app.require_subcommand(1);
  std::string format = "table";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"table", "csv", "json"}));

  int exit_code = 0;

  // ---- compare ----
  auto* cmd_compare = app.add_subcommand("compare", "compare two words");
  struct {
    std::string u, v;
    int l = 0;
  } cmp;
  cmd_compare->add_option("--u", cmp.u, "first word")->required();
  cmd_compare->add_option("--v", cmp.v, "second word")->required();
  cmd_compare->add_option("--l", cmp.l, "alphabet size (inferred when omitted)");
  cmd_compare->callback([&] {
    int l = cmp.l ? cmp.l : std::max(infer_alphabet(cmp.u), infer_alphabet(cmp.v));
    Word u = parse_word_arg(cmp.u, l), v = parse_word_arg(cmp.v, l);
    Table t{{"u", "v", "result"}, {{u.str(), v.str(), to_string(compare(u, v))}}};
    t.print(format);
  });

  // ---- divisible ----
  auto* cmd_div = app.add_subcommand("divisible", "n-divisibility variants");
  struct {
    std::string word, mode = "ordinary", z;
    int n = 0, d = 2, kmin = 1, l = 0;
  } div;
  cmd_div->add_option("--word", div.word, "input word")->required();
  cmd_div->add_option("--n", div.n, "number of factors")->required();
  cmd_div->add_option("--mode", div.mode, "ordinary|tail|strong|nd")
      ->check(CLI::IsMember({"ordinary", "tail", "strong", "nd"}));
  cmd_div->add_option("--d", div.d, "power exponent for nd mode");
  cmd_div->add_option("--z", div.z, "comma list of basis words for strong mode");
  cmd_div->add_option("--kmin", div.kmin, "minimal power for strong mode");
  cmd_div->add_option("--l", div.l, "alphabet size");
  cmd_div->callback([&] {
    Word w = parse_word_arg(div.word, div.l);
    json out;
    out["word"] = w.str();
    out["n"] = div.n;
    out["mode"] = div.mode;
    if (div.mode == "ordinary") {
      auto witness = is_n_divisible(w, div.n);
      out["divisible"] = witness.has_value();
      if (witness) out["witness"] = division_json(w, *witness);
    } else if (div.mode == "tail") {
      auto witness = is_tail_n_divisible(w, div.n);
      out["divisible"] = witness.has_value();
      if (witness) out["witness"] = {{"tail_starts", witness->starts}};
    } else if (div.mode == "strong") {
      auto basis = parse_word_list(div.z, w.alphabet_size());
      auto witness = is_strongly_n_divisible(w, div.n, basis, div.kmin);
      out["divisible"] = witness.has_value();
      if (witness) {
        json parts = json::array();
        for (std::size_t i = 0; i < witness->parts.size(); ++i)
          parts.push_back({{"start", witness->parts[i].start},
                           {"len", witness->parts[i].len},
                           {"basis", witness->basis[i].str()},
                           {"exponent", witness->exponents[i]}});
        out["witness"] = parts;
      }
    } else {
      NdVerdict verdict = is_nd_reducible(w, div.n, div.d);
      out["d"] = div.d;
      switch (verdict.kind) {
        case NdVerdict::Kind::NDivisible:
          out["verdict"] = "n_divisible";
          out["witness"] = division_json(w, *verdict.division);
          break;
        case NdVerdict::Kind::HasPower:
          out["verdict"] = "has_power";
          out["witness"] = {{"start", verdict.power->start},
                            {"root", verdict.power->root.str()}};
          break;
        case NdVerdict::Kind::Irreducible:
          out["verdict"] = "irreducible";
          break;
      }
    }
    std::cout << out.dump() << "\n";
  });

  // ---- height ----
  auto* cmd_height = app.add_subcommand("height", "heights and periodic structure");
  struct {
    std::string word, basis, selective, z;
    int shorter_than = 0, k = 0, n = 0, l = 0;
    bool periodic = false;
  } hgt;
  cmd_height->add_option("--word", hgt.word, "input word")->required();
  cmd_height->add_option("--basis", hgt.basis, "comma list of basis words");
  cmd_height->add_option("--shorter-than", hgt.shorter_than,
                         "basis = all words of length < N");
  cmd_height->add_option("--selective", hgt.selective, "small|large")
      ->check(CLI::IsMember({"small", "large"}));
  cmd_height->add_option("--z", hgt.z, "periods for selective height");
  cmd_height->add_option("--k", hgt.k, "selective boundary");
  cmd_height->add_flag("--periodic", hgt.periodic, "periodic fragment count");
  cmd_height->add_option("--n", hgt.n, "degree for --periodic / --shorter-than");
  cmd_height->add_option("--l", hgt.l, "alphabet size");
  cmd_height->callback([&] {
    Word w = parse_word_arg(hgt.word, hgt.l);
    json out;
    out["word"] = w.str();
    if (!hgt.selective.empty()) {
      auto basis = parse_word_list(hgt.z, w.alphabet_size());
      SelectiveHeight result = hgt.selective == "small"
                                   ? small_selective_height(w, basis, hgt.k)
                                   : large_selective_height(w, basis, hgt.k);
      out["selective"] = hgt.selective;
      out["boundary"] = hgt.k;
      out["height"] = result.height;
      out["witness"] = occurrences_json(result.witness);
    } else if (hgt.periodic) {
      SelectiveHeight result = periodic_fragment_count(w, hgt.n);
      out["periodic_count"] = result.height;
      out["witness"] = occurrences_json(result.witness);
    } else {
      std::vector<Word> basis;
      if (!hgt.basis.empty()) {
        basis = parse_word_list(hgt.basis, w.alphabet_size());
      } else {
        int n = hgt.shorter_than ? hgt.shorter_than : hgt.n;
        if (n < 2) throw std::invalid_argument("need --basis or --shorter-than");
        std::vector<int> letters;
        auto rec = [&](auto&& self) -> void {
          if (!letters.empty()) basis.emplace_back(letters, w.alphabet_size());
          if (letters.size() + 1 >= static_cast<std::size_t>(n)) return;
          for (int c = 0; c < w.alphabet_size(); ++c) {
            letters.push_back(c);
            self(self);
            letters.pop_back();
          }
        };
        rec(rec);
      }
      auto factorization = height_over(w, basis);
      out["representable"] = factorization.has_value();
      if (factorization) {
        out["height"] = factorization->height();
        json blocks = json::array();
        for (const PowerBlock& b : factorization->blocks)
          blocks.push_back({{"base", b.base.str()}, {"exponent", b.exponent}});
        out["factorization"] = blocks;
      }
    }
    std::cout << out.dump() << "\n";
  });

  // ---- fragments ----
  auto* cmd_frag = app.add_subcommand("fragments", "periodic fragment extraction");
  struct {
    std::string word;
    int t = 0, l = 0;
  } frag;
  cmd_frag->add_option("--word", frag.word, "input word")->required();
  cmd_frag->add_option("--t", frag.t, "exponent threshold")->required();
  cmd_frag->add_option("--l", frag.l, "alphabet size");
  cmd_frag->callback([&] {
    Word w = parse_word_arg(frag.word, frag.l);
    FragmentReport report = extract_fragments(w, frag.t);
    if (format == "json") {
      json fragments = json::array();
      for (const Fragment& f : report.fragments) {
        json pieces = json::array();
        for (auto [start, len] : f.source_pieces)
          pieces.push_back({{"start", start}, {"len", len}});
        fragments.push_back({{"period", f.period.str()},
                             {"exponent", f.exponent},
                             {"cut_offset", f.cut_offset},
                             {"source_pieces", pieces}});
      }
      json out{{"input", w.str()},
               {"fragments", fragments},
               {"residual", report.residual.str()}};
      std::cout << out.dump() << "\n";
    } else {
      std::cout << report.to_text();
    }
  });

  // ---- bounds ----
  auto* cmd_bounds = app.add_subcommand("bounds", "closed-form bound values");
  struct {
    std::string formula;
    BoundsQuery q;
  } bnd;
  cmd_bounds->add_option("--formula", bnd.formula, "formula name or 'all'")->required();
  cmd_bounds->add_option("--n", bnd.q.n, "n");
  cmd_bounds->add_option("--d", bnd.q.d, "d");
  cmd_bounds->add_option("--l", bnd.q.l, "l");
  cmd_bounds->add_option("--k", bnd.q.k, "k");
  cmd_bounds->callback([&] {
    Table t{{"name", "args", "value"}, {}};
    if (bnd.formula == "all") {
      for (const char* name : {"psi", "phi", "upsilon", "upsilon_prime", "beth2",
                               "beth3", "bethn1", "alpha", "pnd", "kuzmin", "gk",
                               "xi_upper", "epsilon_upper", "lopatin"}) {
        try {
          add_bounds_row(t, name, bnd.q);
        } catch (const std::exception&) {
          // skip formulas whose arguments are missing or out of domain
        }
      }
    } else {
      add_bounds_row(t, bnd.formula, bnd.q);
    }
    t.print(format);
  });

  // ---- enum ----
  auto* cmd_enum = app.add_subcommand("enum", "permutations, tableaux, counts");
  struct {
    bool xi = false, posets = false, delta = false, multilinear = false;
    std::string perm, series;
    int k = 0, n = 0, l = 0, series_k = 0, series_max = -1;
  } en;
  cmd_enum->add_flag("--xi", en.xi, "xi paths row");
  cmd_enum->add_flag("--posets", en.posets, "permutationally-ordered poset counts");
  cmd_enum->add_flag("--delta", en.delta, "tableaux with at most k rows");
  cmd_enum->add_flag("--multilinear", en.multilinear, "multilinear word count");
  cmd_enum->add_option("--rsk", en.perm, "one-line permutation, comma separated");
  cmd_enum->add_option("--series", en.series, "xi series: --series k,n_max");
  cmd_enum->add_option("--k", en.k, "k");
  cmd_enum->add_option("--n", en.n, "n");
  cmd_enum->add_option("--l", en.l, "l");
  cmd_enum->callback([&] {
    if (en.xi) {
      BigInt brute = xi_bruteforce(en.k, en.n);
      BigInt hook = xi_hook(en.k, en.n);
      std::string gessel = en.k == 3 ? gessel_xi3(en.n).str() : "-";
      BigInt series = xi_series(en.k, en.n).back();
      Table t{{"n", "k", "xi_bruteforce", "xi_hook", "xi_gessel", "xi_series",
               "bound"},
              {{std::to_string(en.n), std::to_string(en.k), brute.str(), hook.str(),
                gessel, series.str(), rational_to_string(xi_upper(en.k, en.n))}}};
      t.print(format);
      return;
    }
    if (en.posets) {
      Table t{{"width", "count", "epsilon_upper"}, {}};
      for (const auto& [width, count] : count_perm_ordered_posets(en.n))
        t.rows.push_back({std::to_string(width), count.str(),
                          rational_to_string(epsilon_upper(width, en.n))});
      t.print(format);
      return;
    }
    if (en.delta) {
      Table t{{"k", "n", "delta", "bound"},
              {{std::to_string(en.k), std::to_string(en.n),
                delta_count(en.k, en.n).str(),
                rational_to_string(BigRat(int_pow(BigInt(en.k), en.n),
                                          factorial(en.k - 1)))}}};
      t.print(format);
      return;
    }
    if (en.multilinear) {
      BigRat bound = BigRat(factorial(en.l) * int_pow(BigInt(en.k), 2 * en.n),
                            factorial(en.n) * factorial(en.l - en.n) *
                                factorial(en.k - 1) * factorial(en.k - 1));
      Table t{{"l", "n", "k", "count", "bound"},
              {{std::to_string(en.l), std::to_string(en.n), std::to_string(en.k),
                multilinear_count(en.l, en.n, en.k).str(),
                rational_to_string(bound)}}};
      t.print(format);
      return;
    }
    if (!en.perm.empty()) {
      Permutation p;
      std::istringstream in(en.perm);
      std::string item;
      while (std::getline(in, item, ',')) p.push_back(std::stoi(item));
      auto [P, Q] = rsk(p);
      json out{{"permutation", p},
               {"P", P.rows},
               {"Q", Q.rows},
               {"shape", P.shape()},
               {"lds", lds_length(p)}};
      std::cout << out.dump() << "\n";
      return;
    }
    if (!en.series.empty()) {
      auto comma = en.series.find(',');
      if (comma == std::string::npos)
        throw std::invalid_argument("--series wants k,n_max");
      int k = std::stoi(en.series.substr(0, comma));
      int n_max = std::stoi(en.series.substr(comma + 1));
      Table t{{"n", "xi"}, {}};
      auto values = xi_series(k, n_max);
      for (int n = 0; n <= n_max; ++n)
        t.rows.push_back({std::to_string(n), values[n].str()});
      t.print(format);
      return;
    }
    throw std::invalid_argument("choose one of --xi/--posets/--delta/--multilinear/--rsk/--series");
  });

  // ---- thue ----
  auto* cmd_thue = app.add_subcommand("thue", "morphisms and power-free words");
  struct {
    int tm_prefix = 0, ternary_prefix = 0, steps = 0, l = 0;
    std::string square_free, cube_free, morphism, test, apply_word, seed_word;
  } th;
  cmd_thue->add_option("--tm-prefix", th.tm_prefix, "Thue-Morse prefix length");
  cmd_thue->add_option("--ternary-prefix", th.ternary_prefix,
                       "ternary fixed-point prefix length");
  cmd_thue->add_option("--square-free", th.square_free, "test a word");
  cmd_thue->add_option("--cube-free", th.cube_free, "test a word");
  cmd_thue->add_option("--morphism", th.morphism, "letter=image, comma separated");
  cmd_thue->add_option("--test", th.test, "crochemore|thue2")
      ->check(CLI::IsMember({"crochemore", "thue2"}));
  cmd_thue->add_option("--apply", th.apply_word, "apply morphism to a word");
  cmd_thue->add_option("--iterate", th.seed_word, "iterate morphism from a seed");
  cmd_thue->add_option("--steps", th.steps, "iteration count");
  cmd_thue->add_option("--l", th.l, "target alphabet size");
  cmd_thue->callback([&] {
    json out;
    if (th.tm_prefix > 0) {
      Word w = Word::parse("a", 2);
      while (w.size() < static_cast<std::size_t>(th.tm_prefix))
        w = apply(thue_morse_morphism(), w);
      w = w.subword(0, th.tm_prefix);
      out = {{"prefix", w.str()}, {"cube_free", is_cube_free(w)}};
    } else if (th.ternary_prefix > 0) {
      Word w = Word::parse("a", 3);
      while (w.size() < static_cast<std::size_t>(th.ternary_prefix))
        w = apply(thue_ternary_morphism(), w);
      w = w.subword(0, th.ternary_prefix);
      out = {{"prefix", w.str()}, {"square_free", is_square_free(w)}};
    } else if (!th.square_free.empty()) {
      Word w = parse_word_arg(th.square_free, th.l);
      out = {{"word", w.str()}, {"square_free", is_square_free(w)}};
    } else if (!th.cube_free.empty()) {
      Word w = parse_word_arg(th.cube_free, th.l);
      out = {{"word", w.str()}, {"cube_free", is_cube_free(w)}};
    } else if (!th.morphism.empty() && !th.test.empty()) {
      Morphism m = parse_morphism(th.morphism, th.l);
      if (th.test == "crochemore")
        out = {{"k", crochemore_k(m)},
               {"square_free_morphism", is_square_free_morphism(m)}};
      else
        out = {{"thue2_criterion", thue2_criterion(m)}};
    } else if (!th.morphism.empty() && !th.apply_word.empty()) {
      Morphism m = parse_morphism(th.morphism, th.l);
      Word w = Word::parse(th.apply_word, m.source_size);
      out = {{"image", apply(m, w).str()}};
    } else if (!th.morphism.empty() && !th.seed_word.empty()) {
      Morphism m = parse_morphism(th.morphism, th.l);
      Word w = Word::parse(th.seed_word, m.source_size);
      out = {{"image", iterate(m, w, th.steps).str()}};
    } else {
      throw std::invalid_argument("nothing to do; see --help");
    }
    std::cout << out.dump() << "\n";
  });

  // ---- search ----
  auto* cmd_search = app.add_subcommand("search", "exhaustive extremal searches");
  struct {
    std::string op;
    int n = 0, d = 0, l = 0, cap = 0, max_len = 0, period_len = 0, k = 0;
    int p = 0, width = 0, workers = 1;
    bool timing = false;
  } sr;
  cmd_search->add_option("--op", sr.op, "irreducible|height|selective|process|graph")
      ->required()
      ->check(CLI::IsMember({"irreducible", "height", "selective", "process",
                             "graph"}));
  cmd_search->add_option("--n", sr.n, "n");
  cmd_search->add_option("--d", sr.d, "d");
  cmd_search->add_option("--l", sr.l, "alphabet size");
  cmd_search->add_option("--cap", sr.cap, "depth cap");
  cmd_search->add_option("--max-len", sr.max_len, "max word length");
  cmd_search->add_option("--period-len", sr.period_len, "period length");
  cmd_search->add_option("--k", sr.k, "selective boundary");
  cmd_search->add_option("--p", sr.p, "process parameter");
  cmd_search->add_option("--width", sr.width, "process word width");
  cmd_search->add_option("--workers", sr.workers, "parallel workers");
  cmd_search->add_flag("--timing", sr.timing, "include wall time in output");
  cmd_search->callback([&] {
    SearchReport report;
    if (sr.op == "irreducible")
      report = max_irreducible_length(sr.n, sr.d, sr.l, sr.cap, sr.workers);
    else if (sr.op == "height")
      report = max_height_empirical(sr.n, sr.l, sr.max_len, sr.workers);
    else if (sr.op == "selective")
      report = max_selective_height_empirical(sr.period_len, sr.n, sr.l, sr.max_len,
                                              sr.k, sr.workers);
    else if (sr.op == "process")
      report = max_process_sequence(sr.p, sr.width);
    else
      report = lower_bound_graph(sr.n, sr.l);
    if (report.violated())
      std::cerr << "error: bound violated in " << report.op << "\n";
    exit_code = print_report(report, format == "table" ? "table" : "json", sr.timing);
  });

  // ---- selftest ----
  auto* cmd_selftest = app.add_subcommand("selftest", "run the invariant suite");
  struct {
    std::uint64_t seed = 0;
  } st;
  cmd_selftest->add_option("--seed", st.seed, "seed for randomized properties");
  cmd_selftest->callback([&] {
    json out = run_selftest(st.seed);
    std::cout << out.dump() << "\n";
    if (!out["all_pass"].get<bool>()) exit_code = 2;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}

}  // namespace wordlab
