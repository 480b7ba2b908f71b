#include <pybind11/gil_safe_call_once.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "markov/markov.hpp"

namespace py = pybind11;
using namespace markov;

// Python int <-> mpz_class through decimal text; exact for any size.
namespace pybind11::detail {

template <>
struct type_caster<mpz_class> {
  PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

  bool load(handle src, bool) {
    if (!src || !PyLong_Check(src.ptr())) return false;
    value = mpz_class(py::str(src).cast<std::string>(), 10);
    return true;
  }

  static handle cast(const mpz_class& v, return_value_policy, handle) {
    const std::string s = v.get_str(10);
    return PyLong_FromString(s.c_str(), nullptr, 10);
  }
};

template <>
struct type_caster<mpq_class> {
  PYBIND11_TYPE_CASTER(mpq_class, const_name("fractions.Fraction"));

  bool load(handle, bool) { return false; }

  static handle cast(const mpq_class& v, return_value_policy, handle) {
    mpq_class c(v);
    c.canonicalize();
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(mpz_class(c.get_num()), mpz_class(c.get_den())).release();
  }
};

template <>
struct type_caster<Triplet> {
  PYBIND11_TYPE_CASTER(Triplet, const_name("tuple[int, int, int]"));

  bool load(handle src, bool convert) {
    if (!py::isinstance<py::sequence>(src) || py::isinstance<py::str>(src)) return false;
    auto seq = py::reinterpret_borrow<py::sequence>(src);
    if (seq.size() != 3) return false;
    make_caster<mpz_class> a, b, c;
    if (!a.load(seq[0], convert) || !b.load(seq[1], convert) || !c.load(seq[2], convert)) return false;
    value = Triplet{cast_op<mpz_class>(a), cast_op<mpz_class>(b), cast_op<mpz_class>(c)};
    return true;
  }

  static handle cast(const Triplet& t, return_value_policy p, handle h) {
    return py::make_tuple(py::reinterpret_steal<py::object>(make_caster<mpz_class>::cast(t.x, p, h)),
                          py::reinterpret_steal<py::object>(make_caster<mpz_class>::cast(t.R, p, h)),
                          py::reinterpret_steal<py::object>(make_caster<mpz_class>::cast(t.z, p, h)))
        .release();
  }
};

}  // namespace pybind11::detail

namespace {

EdgeSide side_of(const std::string& s) {
  if (s == "L") return EdgeSide::Left;
  if (s == "R") return EdgeSide::Right;
  throw Error(Errc::InvalidArgument, "side must be 'L' or 'R'");
}

// One tree per interpreter, deepened on demand and shared by every call.
MarkovTree& shared_tree() {
  static MarkovTree tree(6);
  return tree;
}

Triplet head_of(const BigInt& R) {
  if (R == 1) return make_triplet(1, 1, 1);
  if (R == 2) return make_triplet(1, 2, 1);
  return shared_tree().lookup(R).first;
}

py::tuple pair(const SquarePair& p) { return py::make_tuple(p.sigma, p.lambda); }

py::dict lists_dict(const EdgeSquareLists& l) {
  py::dict d;
  d["alpha"] = pair(l.alpha);
  d["beta"] = pair(l.beta);
  d["gamma"] = pair(l.gamma);
  d["delta"] = pair(l.delta);
  return d;
}

EdgeSquareLists lists_for(const Triplet& h, EdgeSide s) {
  auto list = shared_tree().containing(edge_triplet(h, s, 2).R);
  return edge_square_lists(h, s, *list);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Markov triple tree: enumeration, edge sequences, Pell solutions, digit cycles, special squares, Farey indexing";

  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> markov_error;
  markov_error.call_once_and_store_result(
      [&]() -> py::object { return py::exception<Error>(m, "MarkovError", PyExc_ValueError); });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      const py::object& cls = markov_error.get_stored();
      py::object exc = cls(e.what());
      exc.attr("code") = std::string(errc_name(e.code()));
      PyErr_SetObject(cls.ptr(), exc.ptr());
    }
  });

  // Tree.
  m.def("is_markov", &satisfies_markov, py::arg("triplet"));
  m.def("children", &children, py::arg("triplet"));
  m.def("parent", &parent, py::arg("triplet"));
  m.def("sibling_number", &sibling_number, py::arg("triplet"));
  m.def(
      "enumerate",
      [](unsigned depth) {
        py::list out;
        const MarkovList list = enumerate(depth);
        for (const auto& e : list.entries()) out.append(py::make_tuple(e.position, e.depth, e.triplet));
        return out;
      },
      py::arg("depth"), "(position, depth, triplet) for every node through `depth`, breadth-first.");
  m.def(
      "triplet_for_region", [](const BigInt& R) { return shared_tree().lookup(R); }, py::arg("R"),
      "(triplet, position) of a region, deepening the shared tree as needed.");

  // Lucas sequences and edges.
  m.def("lucas_U", [](const BigInt& R, std::int64_t k) { return lucas_U(LucasParams(R), k); }, py::arg("R"), py::arg("k"));
  m.def("lucas_V", [](const BigInt& R, std::int64_t k) { return lucas_V(LucasParams(R), k); }, py::arg("R"), py::arg("k"));
  m.def(
      "edge_region_number",
      [](const Triplet& head, const std::string& side, std::int64_t n) {
        return edge_region_number(head, side_of(side), n);
      },
      py::arg("head"), py::arg("side"), py::arg("n"));
  m.def(
      "edge_triplet",
      [](const Triplet& head, const std::string& side, std::int64_t n) { return edge_triplet(head, side_of(side), n); },
      py::arg("head"), py::arg("side"), py::arg("n"));

  // Pell.
  m.def("discriminant", &discriminant, py::arg("R"));
  m.def("solve_pell", &solve_pell_brute, py::arg("R"), py::arg("j_bound"),
        "Every J <= j_bound with D(R) J^2 - 4R^2 a perfect square.");
  m.def(
      "generate_solutions",
      [](const Triplet& head, std::size_t count, bool backward) {
        py::list out;
        for (const auto& s : generate_solutions(head, count, backward ? PellDirection::Backward : PellDirection::Forward)) {
          out.append(py::make_tuple(s.n, s.K, s.J));
        }
        return out;
      },
      py::arg("head"), py::arg("count"), py::arg("backward") = false);
  m.def(
      "uniqueness_check",
      [](const BigInt& R) {
        UniquenessReport r = uniqueness_check(R, *shared_tree().containing(R));
        py::dict d;
        d["R"] = r.R;
        d["triplet"] = r.triplet;
        d["bound"] = r.bound;
        d["solutions"] = r.solutions;
        d["ok"] = r.ok;
        return d;
      },
      py::arg("R"));

  // Digit cycles.
  m.def("parity_type", &parity_type, py::arg("triplet"));
  m.def(
      "cycle_length",
      [](const Triplet& head, const std::string& side, unsigned d) { return cycle_length(head, side_of(side), d); },
      py::arg("head"), py::arg("side"), py::arg("digits"));
  m.def(
      "cycle_residues",
      [](const Triplet& head, const std::string& side, unsigned d) { return cycle_residues(head, side_of(side), d); },
      py::arg("head"), py::arg("side"), py::arg("digits"));
  m.def(
      "is_palindromic_cycle",
      [](const Triplet& head, unsigned d) { return palindromic_cycle(head, d).left.palindromic_with_opposite; },
      py::arg("head"), py::arg("digits"));
  m.def(
      "last_digit_frequency", [](unsigned depth, unsigned d) { return last_digit_frequency(depth, d); },
      py::arg("depth"), py::arg("digits"));

  // Special squares.
  m.def(
      "q_decompose",
      [](const Triplet& t) {
        QResult q = q_decompose(t, *shared_tree().containing(t.R));
        return py::make_tuple(pair(q.region), pair(q.sibling));
      },
      py::arg("triplet"), "((sigma, Lambda) of R, (sigma, Lambda) of the sibling number).");
  m.def(
      "edge_square_lists",
      [](const BigInt& R, const std::string& side) { return lists_dict(lists_for(head_of(R), side_of(side))); },
      py::arg("R"), py::arg("side"));
  m.def(
      "k_sf",
      [](const BigInt& R, const std::string& side, std::int64_t n) {
        const Triplet h = head_of(R);
        return pair(k_sf(lists_for(h, side_of(side)), h.R, n));
      },
      py::arg("R"), py::arg("side"), py::arg("n"));

  // Farey.
  m.def(
      "farey_for_region",
      [](const BigInt& R) {
        shared_tree().lookup(R);
        FareyTriplet f = farey_for_region(R, *shared_tree().containing(R));
        return py::make_tuple(f.left, f.mid, f.right);
      },
      py::arg("R"));
  m.def(
      "plot_points",
      [](unsigned depth) {
        py::list out;
        MarkovList list = enumerate(depth);
        for (const auto& p : plot_points(depth, list)) out.append(py::make_tuple(p.farey, p.R, p.log10_R));
        return out;
      },
      py::arg("depth"), "(farey value, R, log10 R) for one tree level in Farey order.");
}
