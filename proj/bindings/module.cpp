#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sortal/chain.hpp"
#include "sortal/examples.hpp"
#include "sortal/substitution.hpp"

namespace py = pybind11;
using namespace sortal;

namespace {

Context make_context(const std::vector<std::string>& names) {
  Context ctx;
  for (const std::string& n : names) ctx.entries.push_back(Sort{n});
  return ctx;
}

std::vector<std::string> context_names(const Context& ctx) {
  std::vector<std::string> out;
  for (const Sort& s : ctx.entries) out.push_back(s.name);
  return out;
}

py::object json_to_py(const nlohmann::json& j) {
  switch (j.type()) {
    case nlohmann::json::value_t::null:
      return py::none();
    case nlohmann::json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case nlohmann::json::value_t::number_integer:
      return py::int_(j.get<std::int64_t>());
    case nlohmann::json::value_t::number_unsigned:
      return py::int_(j.get<std::uint64_t>());
    case nlohmann::json::value_t::number_float:
      return py::float_(j.get<double>());
    case nlohmann::json::value_t::string:
      return py::str(j.get<std::string>());
    case nlohmann::json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(json_to_py(item));
      return out;
    }
    default: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it)
        out[py::str(it.key())] = json_to_py(it.value());
      return out;
    }
  }
}

py::list verdicts_to_py(const std::vector<Verdict>& verdicts) {
  py::list out;
  for (const Verdict& v : verdicts) out.append(json_to_py(v.to_json()));
  return out;
}

Assignment make_assignment(const std::vector<std::string>& source,
                           const std::vector<std::string>& target,
                           const std::vector<Term>& images) {
  Assignment f;
  f.source = make_context(source);
  f.target = make_context(target);
  f.map = images;
  return f;
}

CheckConfig make_config(std::uint64_t seed, std::size_t samples) {
  CheckConfig cfg;
  cfg.seed = seed;
  cfg.samples = samples;
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Well-sorted syntax with certified substitution from multi-sorted "
            "binding signatures.";

  py::register_exception<ParseError>(m, "SortalParseError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "SortalDomainError", PyExc_ValueError);
  py::register_exception<InvalidSignature>(m, "InvalidSignatureError", PyExc_ValueError);

  py::class_<Argument>(m, "Argument")
      .def_property_readonly("binders",
                             [](const Argument& a) {
                               std::vector<std::string> out;
                               for (const Sort& s : a.binders) out.push_back(s.name);
                               return out;
                             })
      .def_property_readonly("sort", [](const Argument& a) { return a.sort.name; });

  py::class_<OpDecl>(m, "OpDecl")
      .def_readonly("name", &OpDecl::name)
      .def_readonly("args", &OpDecl::args)
      .def_property_readonly("result", [](const OpDecl& o) { return o.result.name; });

  py::class_<Signature>(m, "Signature")
      .def_property_readonly("sorts",
                             [](const Signature& sig) {
                               std::vector<std::string> out;
                               for (const Sort& s : sig.sorts()) out.push_back(s.name);
                               return out;
                             })
      .def_property_readonly("ops", &Signature::ops)
      .def("serialize", [](const Signature& sig) { return serialize_signature(sig); })
      .def("__eq__", [](const Signature& a, const Signature& b) { return a == b; })
      .def("__repr__", [](const Signature& sig) {
        return "<Signature: " + std::to_string(sig.sorts().size()) + " sorts, " +
               std::to_string(sig.ops().size()) + " ops>";
      });

  py::class_<Term>(m, "Term")
      .def_property_readonly("sort", [](const Term& t) { return t.sort().name; })
      .def_property_readonly("context", [](const Term& t) { return context_names(t.context()); })
      .def_property_readonly("is_var", [](const Term& t) { return t.is_var(); })
      .def("height", [](const Term& t) { return height(t); })
      .def("__str__", [](const Term& t) { return print_term(t); })
      .def("__eq__", [](const Term& a, const Term& b) { return a == b; })
      .def("__repr__", [](const Term& t) {
        return print_term(t) + " : " + t.sort().name + " over [" + t.context().str() + "]";
      });

  m.def("parse_signature", [](const std::string& text) { return parse_signature(text); });
  m.def("serialize_signature", &serialize_signature);
  m.def("validate", [](const Signature& sig) {
    py::list out;
    for (const Diagnostic& d : validate(sig)) out.append(py::make_tuple(d.code, d.message));
    return out;
  });
  m.def("sum_signatures", &sum);
  m.def("stlc_finitized", [](const std::vector<std::string>& base, std::size_t depth) {
    std::vector<Sort> sorts;
    for (const std::string& n : base) sorts.push_back(Sort{n});
    return stlc_finitized(sorts, depth);
  });
  m.def("stlc_example", &stlc_example);
  m.def("pcf_example", &pcf_example);
  m.def("coc_example", &coc_example);

  m.def("var", [](const std::vector<std::string>& ctx, std::size_t i) {
    return var(make_context(ctx), i);
  });
  m.def("mk_op", [](const Signature& sig, const std::vector<std::string>& ctx,
                    const std::string& name, const std::vector<Term>& args) {
    return mk_op(sig, make_context(ctx), name, args);
  });
  m.def("parse_term",
        [](const Signature& sig, const std::vector<std::string>& ctx, const std::string& text,
           const std::optional<std::string>& expect) {
          std::optional<Sort> sort;
          if (expect) sort = Sort{*expect};
          return parse_term(sig, make_context(ctx), text, sort);
        },
        py::arg("sig"), py::arg("context"), py::arg("text"), py::arg("expect") = py::none());
  m.def("enumerate_terms",
        [](const Signature& sig, const std::vector<std::string>& ctx, const std::string& sort,
           std::size_t max_height) {
          return enumerate_terms(sig, make_context(ctx), Sort{sort}, max_height);
        });

  m.def("bind",
        [](const Signature& sig, const std::vector<std::string>& source,
           const std::vector<std::string>& target, const std::vector<Term>& images,
           const Term& t) { return bind(sig, make_assignment(source, target, images), t); },
        py::arg("sig"), py::arg("source"), py::arg("target"), py::arg("images"), py::arg("term"));
  m.def("subst",
        [](const Signature& sig, const std::vector<std::string>& x,
           const std::vector<std::string>& y, const std::vector<Term>& images, const Term& t) {
          return subst(sig, make_assignment(x, y, images), t);
        },
        py::arg("sig"), py::arg("x"), py::arg("y"), py::arg("images"), py::arg("term"));
  m.def("join",
        [](const Signature& sig, const Term& outer, const std::vector<std::string>& source,
           const std::vector<std::string>& target, const std::vector<Term>& images) {
          return join(sig, outer, make_assignment(source, target, images));
        },
        py::arg("sig"), py::arg("outer"), py::arg("source"), py::arg("target"),
        py::arg("images"));

  m.def("check_monad_laws",
        [](const Signature& sig, std::uint64_t seed, std::size_t samples) {
          return verdicts_to_py(check_monad_laws(sig, make_config(seed, samples)));
        },
        py::arg("sig"), py::arg("seed") = 0, py::arg("samples") = 1000);
  m.def("check_strength_laws",
        [](const Signature& sig, std::uint64_t seed, std::size_t samples) {
          return verdicts_to_py(check_strength_laws(sig, make_config(seed, samples)));
        },
        py::arg("sig"), py::arg("seed") = 0, py::arg("samples") = 1000);
  m.def("check_dist_laws",
        [](const Signature& sig, std::uint64_t seed, std::size_t samples) {
          return verdicts_to_py(check_dist_laws(sig, make_config(seed, samples)));
        },
        py::arg("sig"), py::arg("seed") = 0, py::arg("samples") = 1000);
  m.def("check_interchange",
        [](const Signature& sig, std::uint64_t seed, std::size_t samples) {
          return verdicts_to_py(check_interchange(sig, make_config(seed, samples)));
        },
        py::arg("sig"), py::arg("seed") = 0, py::arg("samples") = 1000);
  m.def("adjunction_suite", [](const Signature& sig, std::uint64_t seed) {
          AdjunctionOptions opts;
          opts.seed = seed;
          return verdicts_to_py(adjunction_suite(sig, opts));
        },
        py::arg("sig"), py::arg("seed") = 0);

  m.def("level_count",
        [](const Signature& sig, std::size_t n, const std::vector<std::string>& ctx,
           const std::string& sort) {
          ChainOracle oracle(sig);
          return oracle.level_count(n, make_context(ctx), Sort{sort});
        });
  m.def("check_against_terms",
        [](const Signature& sig, const std::vector<std::string>& ctx, const std::string& sort,
           std::size_t n, std::uint64_t budget) {
          ChainOptions opts;
          opts.cell_budget = budget;
          return json_to_py(check_against_terms(sig, make_context(ctx), Sort{sort}, n, opts)
                                .to_json());
        },
        py::arg("sig"), py::arg("context"), py::arg("sort"), py::arg("n"),
        py::arg("budget") = 2000000);
}
