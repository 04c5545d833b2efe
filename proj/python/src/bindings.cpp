#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "padisc/catalog.hpp"
#include "padisc/discrepancy.hpp"
#include "padisc/error.hpp"
#include "padisc/padic.hpp"
#include "padisc/paircorr.hpp"
#include "padisc/permcheck.hpp"
#include "padisc/polynomial.hpp"
#include "padisc/sequence.hpp"

namespace py = pybind11;
using namespace padisc;

namespace {

// Integers cross the boundary as decimal strings so that size is unbounded.
BigInt to_big(const py::handle& obj) {
    if (!py::isinstance<py::int_>(obj)) throw py::type_error("expected an int");
    return parse_bigint(py::str(obj).cast<std::string>());
}

py::int_ from_big(const BigInt& x) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(x.get_str().c_str(), nullptr, 10));
}

Rational to_rational(const py::handle& obj) {
    if (py::isinstance<py::int_>(obj)) return Rational(to_big(obj));
    if (py::hasattr(obj, "numerator") && py::hasattr(obj, "denominator")) {
        return make_rational(to_big(obj.attr("numerator")), to_big(obj.attr("denominator")));
    }
    if (py::isinstance<py::str>(obj)) return parse_rational(obj.cast<std::string>());
    throw py::type_error("expected an int, a Fraction or a \"u/v\" string");
}

py::object from_rational(const Rational& q) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(from_big(q.get_num()), from_big(q.get_den()));
}

std::vector<BigInt> to_big_list(const py::iterable& values) {
    std::vector<BigInt> out;
    for (const auto& v : values) out.push_back(to_big(v));
    return out;
}

py::dict verdict_dict(const Verdict& v) {
    py::dict d;
    d["method"] = std::string(to_string(v.method));
    d["low_discrepancy"] = v.low_discrepancy;
    d["perm_mod_p"] = v.perm_mod_p;
    d["perm_mod_p2"] = v.perm_mod_p2;
    d["derivative_root"] = v.derivative_root ? py::object(py::int_(*v.derivative_root)) : py::none();
    d["missing_residue"] = v.missing_residue
                               ? py::object(py::make_tuple(v.missing_residue->level, v.missing_residue->residue))
                               : py::none();
    d["collision"] = v.collision ? py::object(py::make_tuple(v.collision->level, v.collision->first,
                                                             v.collision->second))
                                 : py::none();
    return d;
}

py::dict discrepancy_dict(const DiscrepancyResult& r) {
    py::dict d;
    d["value"] = from_rational(r.value);
    d["level"] = r.witness_level ? py::object(py::int_(*r.witness_level)) : py::none();
    d["residue"] = r.witness_residue ? py::object(from_big(*r.witness_residue)) : py::none();
    d["separation_depth"] = r.separation_depth;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact p-adic discrepancy and permutation-polynomial tools";

    static py::exception<Error> base(m, "Error", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<PrecisionError>(m, "PrecisionError", base.ptr());
    py::register_exception<EnumerationLimitError>(m, "EnumerationLimitError", base.ptr());
    py::register_exception<InternalError>(m, "InternalError", base.ptr());
    py::register_exception<ParseError>(m, "ParseError", base.ptr());

    m.def("valuation", [](const py::int_& x, std::uint32_t p) { return valuation(to_big(x), p); }, py::arg("x"),
          py::arg("p"));
    m.def("abs_p", [](const py::int_& x, std::uint32_t p) { return from_rational(abs_p(to_big(x), p)); },
          py::arg("x"), py::arg("p"));
    m.def("ball_level", [](const py::object& r, std::uint32_t p) { return ball_level(to_rational(r), p); },
          py::arg("radius"), py::arg("p"));
    m.def(
        "digits",
        [](const py::int_& x, std::uint32_t p, std::size_t k) {
            const PAdicApprox a = digits_of(to_big(x), p, k);
            return std::vector<std::uint32_t>(a.digits().begin(), a.digits().end());
        },
        py::arg("x"), py::arg("p"), py::arg("K"), "Little-endian base-p digits of x mod p^K");
    m.def(
        "monna",
        [](const std::vector<std::uint32_t>& digits, std::uint32_t p) {
            return from_rational(monna_map(PAdicApprox(p, digits)));
        },
        py::arg("digits"), py::arg("p"));

    m.def("render", [](const std::string& text) { return render(parse_poly(text)); }, py::arg("polynomial"));
    m.def(
        "coefficients",
        [](const std::string& text) {
            py::list out;
            for (const auto& c : parse_poly(text).coefficients()) out.append(from_big(c));
            return out;
        },
        py::arg("polynomial"), "Ascending coefficient list");
    m.def(
        "evaluate", [](const std::string& text, const py::int_& x) { return from_big(parse_poly(text)(to_big(x))); },
        py::arg("polynomial"), py::arg("x"));
    m.def(
        "is_permutation_mod",
        [](const std::string& text, std::uint64_t modulus) { return is_permutation_mod(parse_poly(text), modulus); },
        py::arg("polynomial"), py::arg("m"));
    m.def(
        "roots_mod", [](const std::string& text, std::uint64_t p) { return roots_mod(parse_poly(text), p); },
        py::arg("polynomial"), py::arg("p"));
    m.def(
        "associated",
        [](const std::string& text, std::uint32_t p) {
            const IntPolynomial f = parse_poly(text);
            return py::make_tuple(render(associated_g1(f, p)), render(associated_g2(f, p)));
        },
        py::arg("polynomial"), py::arg("p"), "The associated polynomials (g1, g2), rendered");
    m.def(
        "classify",
        [](const std::string& text, std::uint32_t p) {
            const IntPolynomial f = parse_poly(text);
            py::dict d;
            d["brute_force"] = verdict_dict(classify_low_discrepancy(f, p));
            d["noebauer"] = verdict_dict(noebauer_mod_p2(f, p));
            d["associated"] = p >= 3 ? py::object(verdict_dict(classify_via_associated(f, p))) : py::none();
            return d;
        },
        py::arg("polynomial"), py::arg("p"));

    m.def(
        "sequence",
        [](const std::string& text, std::size_t count) {
            py::list out;
            for (const auto& x : poly_sequence(parse_poly(text), count)) out.append(from_big(x));
            return out;
        },
        py::arg("polynomial"), py::arg("N"), "f(1), ..., f(N)");

    m.def(
        "padic_discrepancy",
        [](const py::iterable& values, std::uint32_t p) { return discrepancy_dict(padic_discrepancy(to_big_list(values), p)); },
        py::arg("values"), py::arg("p"));
    m.def(
        "real_extreme_discrepancy",
        [](const py::iterable& points) {
            std::vector<Rational> xs;
            for (const auto& x : points) xs.push_back(to_rational(x));
            return from_rational(real_extreme_discrepancy(xs));
        },
        py::arg("points"));
    m.def(
        "meijer_check",
        [](const py::object& delta, const py::object& d, std::uint32_t p) {
            const MeijerCheck c = meijer_bound_check(to_rational(delta), to_rational(d), p);
            py::dict out;
            out["lower_holds"] = c.lower_holds;
            out["upper"] = std::string(to_string(c.upper));
            out["upper_bound"] = c.upper_bound;
            out["holds"] = c.holds();
            return out;
        },
        py::arg("delta"), py::arg("d"), py::arg("p"));

    m.def(
        "threshold_level",
        [](const py::object& s, std::size_t n, const py::object& alpha, std::uint32_t p) {
            return threshold_level(to_rational(s), n, to_rational(alpha), p);
        },
        py::arg("s"), py::arg("N"), py::arg("alpha"), py::arg("p"));
    m.def(
        "pair_count",
        [](const py::iterable& values, std::uint32_t p, unsigned long k) {
            return from_big(pair_count(to_big_list(values), p, k));
        },
        py::arg("values"), py::arg("p"), py::arg("k"));
    m.def(
        "f_statistic",
        [](const py::iterable& values, std::uint32_t p, const py::object& alpha, const py::object& s) {
            return from_rational(f_statistic(PairCorrInput{to_big_list(values), p, to_rational(alpha), to_rational(s)}));
        },
        py::arg("values"), py::arg("p"), py::arg("alpha"), py::arg("s"));

    m.def(
        "dickson_entries",
        [] {
            py::list out;
            for (const auto& e : dickson_entries()) {
                py::dict d;
                d["label"] = e.label;
                d["row"] = e.row;
                d["table"] = std::string(to_string(e.table));
                d["primes"] = e.primes.describe();
                d["parameter"] = std::string(to_string(e.predicate));
                d["signs"] = std::string(to_string(e.reading));
                d["roots"] = std::string(to_string(e.roots));
                d["expected_roots"] = e.expected_roots;
                out.append(d);
            }
            return out;
        },
        "The encoded permutation-polynomial tables");
    m.def(
        "exhaustive_search",
        [](std::uint32_t p, unsigned max_degree, bool monic, bool zero_constant, bool nonzero_linear, unsigned workers) {
            SearchOptions options;
            options.workers = workers;
            std::vector<std::string> out;
            {
                py::gil_scoped_release release;
                for (const auto& f :
                     exhaustive_search(p, max_degree, SearchConstraints{monic, zero_constant, nonzero_linear}, options)) {
                    out.push_back(render(f));
                }
            }
            return out;
        },
        py::arg("p"), py::arg("max_degree"), py::arg("monic") = true, py::arg("zero_constant") = true,
        py::arg("nonzero_linear") = false, py::arg("workers") = 1);
    m.def(
        "match_against_table",
        [](const std::vector<std::string>& found, std::uint32_t p) {
            std::vector<IntPolynomial> polys;
            for (const auto& text : found) polys.push_back(parse_poly(text));
            const TableMatch match = match_against_table(polys, p);
            py::list entries;
            for (const auto& e : match.entries) {
                entries.append(py::make_tuple(render(e.polynomial), std::string(to_string(e.kind)), e.source));
            }
            py::list missing;
            for (const auto& e : match.unmatched_references) missing.append(render(e.polynomial));
            py::dict d;
            d["entries"] = entries;
            d["missing"] = missing;
            d["clean"] = match.clean();
            return d;
        },
        py::arg("found"), py::arg("p"));

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out;
            std::ostringstream err;
            const int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run the command-line front end in-process; returns (exit_code, stdout, stderr)");
}
