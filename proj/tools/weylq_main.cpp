// weylq command line tool; talks to the shared library through the C API.
#include <weylq.h>

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

namespace {

struct SystemHandle {
  weylq_system* sys = nullptr;
  ~SystemHandle() { weylq_system_destroy(sys); }
};

struct OwnedString {
  char* s = nullptr;
  ~OwnedString() { weylq_string_free(s); }
};

int fail(weylq_status st) {
  std::cerr << "error (" << weylq_status_name(st) << "): " << weylq_last_error() << "\n";
  return st == WEYLQ_ERR_USAGE || st == WEYLQ_ERR_UNSUPPORTED_TYPE ||
                 st == WEYLQ_ERR_RANK_TOO_LARGE
             ? 2
             : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Weyl group / quantum group toolkit"};
  app.require_subcommand(1);

  std::string system_label, format = "json", class_spec = "coxeter";
  std::string plane_order = "angle-desc", epsilon = "symbolic", emit_path;
  bool use_appendix = false;
  int max_m = 6, max_k = 6;

  auto* classes = app.add_subcommand("classes", "per-class dimension table");
  classes->add_option("system", system_label, "root system label, e.g. A2")->required();
  classes->add_option("--format", format, "json or csv")->capture_default_str();

  auto* ordering = app.add_subcommand("ordering", "adapted normal ordering and segment");
  ordering->add_option("system", system_label, "root system label")->required();
  ordering->add_option("--class", class_spec, "identity|coxeter|w0|word like 1,2,1")
      ->capture_default_str();
  ordering->add_flag("--appendix", use_appendix, "emit the appendix fixture instead");
  ordering->add_option("--plane-order", plane_order, "angle-desc or angle-asc")
      ->capture_default_str();
  ordering->add_option("--emit-ordering", emit_path, "also write the JSON to this file");

  auto* relations = app.add_subcommand("relations", "twisted segment relation table");
  relations->add_option("system", system_label, "root system label")->required();
  relations->add_option("--class", class_spec, "identity|coxeter|w0|word like 1,2,1")
      ->capture_default_str();
  relations->add_option("--plane-order", plane_order, "angle-desc or angle-asc")
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "run the verification suites");
  verify->add_option("system", system_label, "root system label")->required();

  auto* sl2w = app.add_subcommand("sl2w", "the explicit sl2 module");
  sl2w->add_option("--max-m", max_m, "torus power truncation")->capture_default_str();
  sl2w->add_option("--max-k", max_k, "Casimir power truncation")->capture_default_str();
  sl2w->add_option("--epsilon", epsilon, "symbolic or rational p/q")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (sl2w->parsed()) {
    OwnedString out;
    weylq_status st = weylq_sl2w(max_m, max_k, epsilon.c_str(), &out.s);
    if (st != WEYLQ_OK) return fail(st);
    std::cout << out.s << "\n";
    return 0;
  }

  if (ordering->parsed() && use_appendix) {
    OwnedString out;
    weylq_status st = weylq_fixture(system_label.c_str(), &out.s);
    if (st != WEYLQ_OK) return fail(st);
    if (!emit_path.empty()) std::ofstream(emit_path) << out.s << "\n";
    std::cout << out.s << "\n";
    return 0;
  }

  SystemHandle sys;
  weylq_status st = weylq_system_create(system_label.c_str(), &sys.sys);
  if (st != WEYLQ_OK) return fail(st);

  if (classes->parsed()) {
    OwnedString out;
    st = weylq_classes(sys.sys, format.c_str(), &out.s);
    if (st != WEYLQ_OK) return fail(st);
    std::cout << out.s;
    if (format == "json") std::cout << "\n";
    return 0;
  }

  if (ordering->parsed()) {
    OwnedString out;
    st = weylq_ordering(sys.sys, class_spec.c_str(), plane_order.c_str(), &out.s);
    if (st != WEYLQ_OK) return fail(st);
    if (!emit_path.empty()) std::ofstream(emit_path) << out.s << "\n";
    std::cout << out.s << "\n";
    return 0;
  }

  if (relations->parsed()) {
    OwnedString out;
    st = weylq_relations(sys.sys, class_spec.c_str(), plane_order.c_str(), &out.s);
    if (st != WEYLQ_OK) return fail(st);
    std::cout << out.s << "\n";
    return 0;
  }

  if (verify->parsed()) {
    OwnedString out;
    int failures = 0;
    st = weylq_verify(sys.sys, &out.s, &failures);
    if (st != WEYLQ_OK) return fail(st);
    std::cout << out.s << "\n";
    return failures == 0 ? 0 : 1;
  }

  return 2;
}
