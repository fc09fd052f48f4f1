#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "noncross/cli.hpp"
#include "noncross/coxeter.hpp"
#include "noncross/errors.hpp"
#include "noncross/freeprob.hpp"
#include "noncross/io.hpp"
#include "noncross/partition.hpp"
#include "noncross/randmat.hpp"
#include "noncross/topo.hpp"

namespace py = pybind11;
using namespace noncross;

namespace {

using Strings = std::vector<std::string>;

std::vector<Rational> to_rationals(const Strings& xs)
{
    std::vector<Rational> out;
    for (const auto& x : xs) out.push_back(parse_rational(x));
    return out;
}

Strings to_strings(const std::vector<Rational>& xs)
{
    Strings out;
    for (const auto& x : xs) out.push_back(to_string(x));
    return out;
}

freeprob::MomentSequence moments_of(const Strings& xs) { return freeprob::MomentSequence(to_rationals(xs)); }

cox::SignedPermutation perm(const std::vector<int>& w) { return cox::SignedPermutation(w); }

}  // namespace

PYBIND11_MODULE(_noncross, m)
{
    m.doc() = "Non-crossing partitions, free cumulants and dual Coxeter systems";

    py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const InputError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    // NC(m)
    m.def("nc_count", [](int n) { return ncp::enumerate_nc(n).size(); });
    m.def("enumerate_nc", [](int n) {
        Strings out;
        for (const auto& p : ncp::enumerate_nc(n)) out.push_back(p.to_string());
        return out;
    });
    m.def("is_noncrossing", [](const std::string& p) { return ncp::is_noncrossing(ncp::parse_partition(p)); });
    m.def("kreweras", [](const std::string& p) { return ncp::kreweras(ncp::parse_nc_partition(p)).to_string(); });
    m.def("meet", [](const std::string& p, const std::string& q) {
        return ncp::meet_nc(ncp::parse_nc_partition(p), ncp::parse_nc_partition(q)).to_string();
    });
    m.def("join", [](const std::string& p, const std::string& q) {
        return ncp::join_nc(ncp::parse_nc_partition(p), ncp::parse_nc_partition(q)).to_string();
    });
    m.def("rank", [](const std::string& p) { return ncp::rank(ncp::parse_nc_partition(p)); });
    m.def("rotate", [](const std::string& p, int k) { return ncp::rotate(ncp::parse_nc_partition(p), k).to_string(); });
    m.def("refine_le", [](const std::string& p, const std::string& q) {
        return ncp::refine_le(ncp::parse_nc_partition(p), ncp::parse_nc_partition(q));
    });
    m.def("mobius", [](const std::string& p, const std::string& q, bool closed) {
        const auto a = ncp::parse_nc_partition(p), b = ncp::parse_nc_partition(q);
        return closed ? ncp::mobius_closed(a, b) : ncp::mobius_nc(a, b);
    }, py::arg("p"), py::arg("q"), py::arg("closed") = false);

    // Free probability; rationals travel as "p/q" strings.
    m.def("cumulants_to_moments", [](const Strings& k) {
        return to_strings(freeprob::cumulants_to_moments(freeprob::CumulantSequence(to_rationals(k))).values());
    });
    m.def("moments_to_cumulants", [](const Strings& x) {
        return to_strings(freeprob::moments_to_cumulants(moments_of(x)).values());
    });
    m.def("free_add", [](const Strings& a, const Strings& b) {
        return to_strings(freeprob::free_add_convolve(moments_of(a), moments_of(b)).values());
    });
    m.def("free_mult", [](const Strings& a, const Strings& b, const std::string& route) {
        if (route == "kreweras") return to_strings(freeprob::free_mult_convolve_kreweras(moments_of(a), moments_of(b)).values());
        if (route == "stransform") return to_strings(freeprob::free_mult_convolve_stransform(moments_of(a), moments_of(b)).values());
        throw InputError("route must be 'kreweras' or 'stransform'");
    }, py::arg("m1"), py::arg("m2"), py::arg("route") = "kreweras");
    m.def("r_transform", [](const Strings& x) { return to_strings(freeprob::r_transform(moments_of(x)).coefficients()); });
    m.def("s_transform", [](const Strings& x) { return to_strings(freeprob::s_transform(moments_of(x)).coefficients()); });
    m.def("semicircle_moments", [](int n) { return to_strings(freeprob::semicircle_moments(n).values()); });
    m.def("free_poisson_moments", [](int n) { return to_strings(freeprob::free_poisson_moments(n).values()); });
    m.def("free_bessel_moments", [](int l, int n) { return to_strings(freeprob::free_bessel_moments(l, n).values()); });
    m.def("nc_pair_count", &freeprob::nc_pair_count);
    m.def("clt_scaled_moments", [](const Strings& k, std::uint64_t n) {
        return to_strings(freeprob::clt_moments(freeprob::CumulantSequence(to_rationals(k)), n).scaled.values());
    });

    // Coxeter groups; elements are windows like [2, -1, 3].
    py::class_<cox::CoxeterContext>(m, "CoxeterContext")
        .def(py::init([](const std::string& family, int rank) {
            return cox::CoxeterContext(cox::parse_family(family), rank);
        }))
        .def_property_readonly("name", &cox::CoxeterContext::name)
        .def_property_readonly("order", &cox::CoxeterContext::order)
        .def_property_readonly("rank", &cox::CoxeterContext::rank)
        .def_property_readonly("coxeter_element", [](const cox::CoxeterContext& c) { return c.coxeter_element().window(); })
        .def_property_readonly("reflections", [](const cox::CoxeterContext& c) {
            Strings out;
            for (const auto& t : c.reflections()) out.push_back(t.name);
            return out;
        })
        .def("absolute_length", [](const cox::CoxeterContext& c, const std::vector<int>& w) { return c.absolute_length(perm(w)); })
        .def("abs_le", [](const cox::CoxeterContext& c, const std::vector<int>& u, const std::vector<int>& v) {
            return c.abs_le(perm(u), perm(v));
        })
        .def("nc_set", [](const cox::CoxeterContext& c) {
            std::vector<std::vector<int>> out;
            for (const auto& u : cox::nc_set(c, c.coxeter_element())) out.push_back(u.window());
            return out;
        })
        .def("red_t", [](const cox::CoxeterContext& c, const std::vector<int>& w) {
            Strings out;
            for (const auto& f : cox::red_t_factorizations(c, perm(w))) out.push_back(f.to_string(c));
            return out;
        })
        .def("hurwitz_orbit_sizes", [](const cox::CoxeterContext& c, const std::vector<int>& w) {
            return cox::hurwitz_orbits(c, perm(w)).orbit_sizes;
        })
        .def("is_quasi_coxeter", [](const cox::CoxeterContext& c, const std::vector<int>& w) {
            return cox::is_quasi_coxeter(c, perm(w));
        })
        .def("is_parabolic_quasi_coxeter", [](const cox::CoxeterContext& c, const std::vector<int>& w) {
            return cox::is_parabolic_quasi_coxeter(c, perm(w));
        });

    // Order complexes.
    m.def("interval_f_vector", [](const std::string& p, const std::string& q) {
        return topo::order_complex_open_interval(ncp::parse_nc_partition(p), ncp::parse_nc_partition(q)).f_vector();
    });
    m.def("reduced_euler_characteristic", [](const std::vector<std::uint64_t>& f) {
        return topo::reduced_euler_characteristic(f);
    });
    m.def("chain_census", [](int n) {
        const auto c = topo::chain_census(n);
        py::dict d;
        d["max_length"] = c.max_length;
        d["maximal_chains"] = c.maximal_chain_count;
        d["by_length"] = c.maximal_chains_by_length;
        d["graded"] = c.graded;
        return d;
    });

    // Monte Carlo.
    m.def("estimate_moment", [](const std::string& family, int l, int k, int n, int trials, std::uint64_t seed, unsigned threads) {
        rmt::GinibreSpec spec{n, l, trials, seed, threads};
        rmt::MomentEstimate e;
        {
            py::gil_scoped_release release;
            if (family == "product") e = rmt::estimate_product_moment(spec, k);
            else if (family == "power") e = rmt::estimate_power_moment(spec, k);
            else throw InputError("family must be 'product' or 'power'");
        }
        py::dict d;
        d["estimate"] = e.mean;
        d["stderr"] = e.std_error;
        d["target"] = to_string(e.target);
        d["z_score"] = e.z_score;
        return d;
    }, py::arg("family"), py::arg("l"), py::arg("k"), py::arg("n"), py::arg("trials"), py::arg("seed") = 1,
       py::arg("threads") = 1);

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    });
}
