#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wordlab/bounds.hpp"
#include "wordlab/divisibility.hpp"
#include "wordlab/enumeration.hpp"
#include "wordlab/height.hpp"
#include "wordlab/poset.hpp"
#include "wordlab/search.hpp"
#include "wordlab/selftest.hpp"
#include "wordlab/thue.hpp"
#include "wordlab/word.hpp"

namespace py = pybind11;
using namespace wordlab;

namespace {

py::int_ to_py_int(const BigInt& v) {
  std::string digits = v.str();
  PyObject* obj = PyLong_FromString(digits.c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

py::object rational_to_py(const BigRat& r) {
  py::module_ fractions = py::module_::import("fractions");
  return fractions.attr("Fraction")(numerator(r).str(), denominator(r).str());
}

Word word_arg(const std::string& text, int l) { return Word::parse(text, l); }

std::vector<Word> word_list(const std::vector<std::string>& texts, int l) {
  std::vector<Word> out;
  for (const auto& t : texts) out.push_back(Word::parse(t, l));
  return out;
}

py::object json_to_py(const nlohmann::json& j) {
  py::module_ json_mod = py::module_::import("json");
  return json_mod.attr("loads")(j.dump());
}

Morphism make_morphism(const std::vector<std::string>& images, int target_l) {
  Morphism m;
  m.source_size = static_cast<int>(images.size());
  m.target_size = target_l;
  for (const auto& image : images) m.images.push_back(Word::parse(image, target_l));
  m.validate();
  return m;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "word combinatorics core";

  m.def("compare", [](const std::string& u, const std::string& v, int l) {
    return to_string(compare(word_arg(u, l), word_arg(v, l)));
  }, py::arg("u"), py::arg("v"), py::arg("l"));

  m.def("k_tail", [](const std::string& w, std::size_t start, std::size_t k, int l) {
    return k_tail(word_arg(w, l), start, k).str();
  }, py::arg("w"), py::arg("start"), py::arg("k"), py::arg("l"));

  m.def("primitive_root", [](const std::string& w, int l) {
    auto [root, exponent] = primitive_root(word_arg(w, l));
    return py::make_tuple(root.str(), exponent);
  }, py::arg("w"), py::arg("l"));

  m.def("contains_power", [](const std::string& w, int d, int l) -> py::object {
    auto occurrence = contains_power(word_arg(w, l), d);
    if (!occurrence) return py::none();
    return py::make_tuple(occurrence->start, occurrence->root.str());
  }, py::arg("w"), py::arg("d"), py::arg("l"));

  m.def("strong_comparable", [](const std::string& u, const std::string& v, int l) {
    return strong_comparable(word_arg(u, l), word_arg(v, l));
  }, py::arg("u"), py::arg("v"), py::arg("l"));

  m.def("strong_classes", [](const std::vector<std::string>& words, int l) {
    return strong_classes(word_list(words, l));
  }, py::arg("words"), py::arg("l"));

  m.def("distinct_factor_count", [](const std::string& w, std::size_t k, int l) {
    return distinct_factor_count(word_arg(w, l), k);
  }, py::arg("w"), py::arg("k"), py::arg("l"));

  m.def("is_n_divisible", [](const std::string& w, int n, int l) -> py::object {
    Word word = word_arg(w, l);
    auto witness = is_n_divisible(word, n);
    if (!witness) return py::none();
    py::list factors;
    for (const Span& f : witness->factors)
      factors.append(py::make_tuple(f.start, word.subword(f.start, f.len).str()));
    return py::make_tuple(word.subword(0, witness->prefix_len).str(), factors);
  }, py::arg("w"), py::arg("n"), py::arg("l"));

  m.def("is_tail_n_divisible", [](const std::string& w, int n, int l) -> py::object {
    auto witness = is_tail_n_divisible(word_arg(w, l), n);
    if (!witness) return py::none();
    return py::cast(witness->starts);
  }, py::arg("w"), py::arg("n"), py::arg("l"));

  m.def("is_strongly_n_divisible",
        [](const std::string& w, int n, const std::vector<std::string>& basis,
           int k_min, int l) -> py::object {
          auto witness =
              is_strongly_n_divisible(word_arg(w, l), n, word_list(basis, l), k_min);
          if (!witness) return py::none();
          py::list parts;
          for (std::size_t i = 0; i < witness->parts.size(); ++i)
            parts.append(py::make_tuple(witness->parts[i].start,
                                        witness->parts[i].len,
                                        witness->basis[i].str(),
                                        witness->exponents[i]));
          return parts;
        },
        py::arg("w"), py::arg("n"), py::arg("basis"), py::arg("k_min"), py::arg("l"));

  m.def("is_nd_reducible", [](const std::string& w, int n, int d, int l) {
    NdVerdict verdict = is_nd_reducible(word_arg(w, l), n, d);
    switch (verdict.kind) {
      case NdVerdict::Kind::NDivisible: return std::string("n_divisible");
      case NdVerdict::Kind::HasPower: return std::string("has_power");
      default: return std::string("irreducible");
    }
  }, py::arg("w"), py::arg("n"), py::arg("d"), py::arg("l"));

  m.def("max_antichain", [](std::size_t n,
                            const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    return max_antichain(Poset(n, pairs));
  }, py::arg("n"), py::arg("less_pairs"));

  m.def("min_chain_partition",
        [](std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
          return min_chain_partition(Poset(n, pairs)).chains;
        },
        py::arg("n"), py::arg("less_pairs"));

  m.def("height_over",
        [](const std::string& w, const std::vector<std::string>& basis, int l)
            -> py::object {
          auto factorization = height_over(word_arg(w, l), word_list(basis, l));
          if (!factorization) return py::none();
          py::list blocks;
          for (const PowerBlock& b : factorization->blocks)
            blocks.append(py::make_tuple(b.base.str(), b.exponent));
          return blocks;
        },
        py::arg("w"), py::arg("basis"), py::arg("l"));

  m.def("small_selective_height",
        [](const std::string& w, const std::vector<std::string>& basis, int boundary,
           int l) {
          return small_selective_height(word_arg(w, l), word_list(basis, l), boundary)
              .height;
        },
        py::arg("w"), py::arg("basis"), py::arg("boundary"), py::arg("l"));

  m.def("large_selective_height",
        [](const std::string& w, const std::vector<std::string>& basis, int boundary,
           int l) {
          return large_selective_height(word_arg(w, l), word_list(basis, l), boundary)
              .height;
        },
        py::arg("w"), py::arg("basis"), py::arg("boundary"), py::arg("l"));

  m.def("periodic_fragment_count", [](const std::string& w, int n, int l) {
    return periodic_fragment_count(word_arg(w, l), n).height;
  }, py::arg("w"), py::arg("n"), py::arg("l"));

  m.def("extract_fragments", [](const std::string& w, int threshold, int l) {
    FragmentReport report = extract_fragments(word_arg(w, l), threshold);
    py::list fragments;
    for (const Fragment& f : report.fragments)
      fragments.append(py::make_tuple(f.period.str(), f.exponent, f.cut_offset,
                                      f.source_pieces));
    return py::make_tuple(fragments, report.residual.str());
  }, py::arg("w"), py::arg("threshold"), py::arg("l"));

  m.def("psi_log10", [](int n, int d, int l) {
    return psi(n, d, l).log10().convert_to<double>();
  });
  m.def("phi_log10", [](int n, int l) {
    return phi(n, l).log10().convert_to<double>();
  });
  m.def("upsilon", [](int n, int l) { return to_py_int(upsilon(n, l).exact_value()); });
  m.def("upsilon_prime", [](int n, int l) { return to_py_int(upsilon_prime(n, l)); });
  m.def("beth", [](int period_len, int l, int n) {
    return to_py_int(beth(period_len, l, n));
  });
  m.def("alpha_lower", [](int n, int l) { return to_py_int(alpha_lower(n, l)); });
  m.def("p_nd", [](int n, int d) { return to_py_int(p_nd(n, d)); });
  m.def("kuzmin", [](int n) { return to_py_int(classic_lower_bounds(n, 2).kuzmin); });
  m.def("gk_height", [](int n, int l) {
    return rational_to_py(classic_lower_bounds(n, l).gk_height);
  });
  m.def("xi_upper", [](int k, int n) { return rational_to_py(xi_upper(k, n)); });
  m.def("epsilon_upper", [](int k, int n) { return rational_to_py(epsilon_upper(k, n)); });

  m.def("rsk", [](const Permutation& p) {
    auto [P, Q] = rsk(p);
    return py::make_tuple(P.rows, Q.rows);
  });
  m.def("inverse_rsk", [](const std::vector<std::vector<int>>& p_rows,
                          const std::vector<std::vector<int>>& q_rows) {
    return inverse_rsk(Tableau{p_rows}, Tableau{q_rows});
  });
  m.def("lds_length", [](const Permutation& p) { return lds_length(p); });
  m.def("hook_count", [](const std::vector<int>& shape) {
    return to_py_int(hook_count(shape));
  });
  m.def("xi_bruteforce", [](int k, int n) { return to_py_int(xi_bruteforce(k, n)); });
  m.def("xi_hook", [](int k, int n) { return to_py_int(xi_hook(k, n)); });
  m.def("gessel_xi3", [](int n) { return to_py_int(gessel_xi3(n)); });
  m.def("xi_series", [](int k, int n_max) {
    py::list out;
    for (const BigInt& v : xi_series(k, n_max)) out.append(to_py_int(v));
    return out;
  });
  m.def("delta_count", [](int k, int n) { return to_py_int(delta_count(k, n)); });
  m.def("count_perm_ordered_posets", [](int n) {
    py::dict out;
    for (const auto& [width, count] : count_perm_ordered_posets(n))
      out[py::int_(width)] = to_py_int(count);
    return out;
  });
  m.def("multilinear_count", [](int l, int n, int k) {
    return to_py_int(multilinear_count(l, n, k));
  });

  m.def("apply_morphism", [](const std::vector<std::string>& images, int target_l,
                             const std::string& w) {
    Morphism m = make_morphism(images, target_l);
    return apply(m, Word::parse(w, m.source_size)).str();
  });
  m.def("iterate_morphism", [](const std::vector<std::string>& images, int target_l,
                               const std::string& seed, int steps) {
    Morphism m = make_morphism(images, target_l);
    return iterate(m, Word::parse(seed, m.source_size), steps).str();
  });
  m.def("is_square_free", [](const std::string& w, int l) {
    return is_square_free(Word::parse(w, l));
  });
  m.def("is_cube_free", [](const std::string& w, int l) {
    return is_cube_free(Word::parse(w, l));
  });
  m.def("crochemore_k", [](const std::vector<std::string>& images, int target_l) {
    return crochemore_k(make_morphism(images, target_l));
  });
  m.def("is_square_free_morphism",
        [](const std::vector<std::string>& images, int target_l) {
          return is_square_free_morphism(make_morphism(images, target_l));
        });
  m.def("thue2_criterion", [](const std::vector<std::string>& images, int target_l) {
    return thue2_criterion(make_morphism(images, target_l));
  });

  m.def("max_irreducible_length", [](int n, int d, int l, int cap, int workers) {
    return json_to_py(max_irreducible_length(n, d, l, cap, workers).to_json());
  }, py::arg("n"), py::arg("d"), py::arg("l"), py::arg("cap"), py::arg("workers") = 1);
  m.def("max_height_empirical", [](int n, int l, int max_len, int workers) {
    return json_to_py(max_height_empirical(n, l, max_len, workers).to_json());
  }, py::arg("n"), py::arg("l"), py::arg("max_len"), py::arg("workers") = 1);
  m.def("max_selective_height_empirical",
        [](int period_len, int n, int l, int max_len, int boundary, int workers) {
          return json_to_py(
              max_selective_height_empirical(period_len, n, l, max_len, boundary,
                                             workers)
                  .to_json());
        },
        py::arg("period_len"), py::arg("n"), py::arg("l"), py::arg("max_len"),
        py::arg("boundary"), py::arg("workers") = 1);
  m.def("max_process_sequence", [](int p, int width) {
    return json_to_py(max_process_sequence(p, width).to_json());
  });
  m.def("lower_bound_graph", [](int n, int l) {
    return json_to_py(lower_bound_graph(n, l).to_json());
  });

  m.def("selftest", [](std::uint64_t seed) { return json_to_py(run_selftest(seed)); },
        py::arg("seed") = 0);
}
