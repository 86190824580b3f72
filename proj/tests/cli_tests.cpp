#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "liaison/jobs.hpp"

using namespace liaison;

namespace {

namespace fs = std::filesystem;

/// Fresh cache directory + hook teardown per test.
struct CacheSandbox {
  fs::path dir;
  CacheSandbox() {
    static int counter = 0;
    dir = fs::temp_directory_path() / ("liaison-test-cache-" + std::to_string(::getpid()) +
                                       "-" + std::to_string(counter++));
    fs::remove_all(dir);
  }
  ~CacheSandbox() {
    uninstall_gb_disk_cache();
    fs::remove_all(dir);
  }
};

JobSpec gb_job() {
  JobSpec spec;
  spec.command = "gb";
  spec.vars = {"x", "y", "z"};
  spec.ideal_text = "x^2 - y*z, y^2 - x*z";
  return spec;
}

}  // namespace

TEST_CASE("execute_job: gb reports are deterministic and polynomials round-trip") {
  JobSpec spec = gb_job();
  Report a = execute_job(spec);
  Report b = execute_job(spec);
  CHECK(a.exit_code == exit_ok);
  CHECK(a.status == "ok");
  CHECK(dump_report(json_of(a)) == dump_report(json_of(b)));

  // printed basis elements re-parse to the library's own basis
  RingPtr ring = RingSpec::make({"x", "y", "z"}, 0);
  IdealHandle I(ring, parse_polynomial_list(spec.ideal_text, ring));
  const GroebnerBasis& gb = I.groebner(ring->canonical_order());
  auto elements = a.payload["elements"];
  REQUIRE(elements.size() == gb.elements.size());
  for (std::size_t i = 0; i < gb.elements.size(); ++i)
    CHECK(parse_polynomial(elements[i].get<std::string>(), ring) == gb.elements[i]);
}

TEST_CASE("execute_job covers the exit-code contract") {
  SECTION("success: 0") {
    CHECK(execute_job(gb_job()).exit_code == exit_ok);
  }
  SECTION("verification failure: 2, payload still carries the certificate") {
    JobSpec spec;
    spec.command = "property-p";
    spec.vars = {"x", "y"};
    spec.ideal_text = "x^2, x*y";
    spec.alpha_text = "x^2";  // initial term not squarefree
    Report rep = execute_job(spec);
    CHECK(rep.exit_code == exit_verification_failed);
    CHECK(rep.status == "verification-failed");
    CHECK(rep.payload["valid"] == false);
    CHECK(rep.payload["squarefree"] == false);
  }
  SECTION("budget exhaustion: 3") {
    JobSpec spec = gb_job();
    spec.budget.max_variables = 2;  // ring has three
    Report rep = execute_job(spec);
    CHECK(rep.exit_code == exit_budget_exceeded);
    CHECK(rep.status == "budget-exceeded");
  }
  SECTION("input errors: 4") {
    JobSpec bad_cmd = gb_job();
    bad_cmd.command = "does-not-exist";
    CHECK(execute_job(bad_cmd).exit_code == exit_input_error);

    JobSpec bad_poly = gb_job();
    bad_poly.ideal_text = "x^2 + q";  // unknown variable
    CHECK(execute_job(bad_poly).exit_code == exit_input_error);

    JobSpec bad_order = gb_job();
    bad_order.order_name = "no-such-order";
    CHECK(execute_job(bad_order).exit_code == exit_input_error);

    JobSpec no_vars;
    no_vars.command = "gb";
    no_vars.ideal_text = "x";
    CHECK(execute_job(no_vars).exit_code == exit_input_error);
  }
  SECTION("never panics: error text lands in the report") {
    JobSpec spec = gb_job();
    spec.ideal_text = "x^2 +";
    Report rep = execute_job(spec);
    CHECK(rep.exit_code == exit_input_error);
    CHECK_FALSE(rep.error.empty());
  }
}

TEST_CASE("double-link failure on a non-unmixed ideal exits 2") {
  // I = (x^2, xy) = (x) meet (x^2, y) has an embedded component, so the
  // round trip through alpha = (xy) lands on (x), not I
  JobSpec spec;
  spec.command = "double-link";
  spec.vars = {"x", "y"};
  spec.ideal_text = "x^2, x*y";
  spec.alpha_text = "x*y";
  Report rep = execute_job(spec);
  CHECK(rep.exit_code == exit_verification_failed);
  CHECK(rep.payload["double_link_returns"] == false);
}

TEST_CASE("fedder containment command reports and verifies") {
  JobSpec spec;
  spec.command = "fedder";
  spec.vars = {"x11", "x12", "x13", "x21", "x22", "x23"};
  spec.characteristic = 2;
  spec.ideal_text = "x11*x22 - x12*x21, x11*x23 - x13*x21, x12*x23 - x13*x22";
  spec.alpha_text = "x11*x22 - x12*x21, x12*x23 - x13*x22";
  Report rep = execute_job(spec);
  CHECK(rep.exit_code == exit_ok);
  CHECK(rep.payload["holds"] == true);
}

TEST_CASE("family command payload carries the recommended metadata") {
  JobSpec spec;
  spec.command = "family";
  spec.family = "pfaffians";
  spec.k = 5;
  spec.characteristic = 3;
  Report rep = execute_job(spec);
  REQUIRE(rep.exit_code == exit_ok);
  CHECK(rep.payload["family"] == "pfaffians");
  CHECK(rep.payload["height"] == 3);
  CHECK(rep.payload["order_name"] == "pfaffian");
  CHECK(rep.payload["ideal"]["generators"].size() == 5);
  CHECK(rep.payload["alpha_indices"] == std::vector<std::size_t>{4, 2, 0});
}

TEST_CASE("ideal digests separate orders and ignore generator permutation") {
  RingPtr ring = RingSpec::make({"x", "y"}, 0);
  IdealHandle I(ring, parse_polynomial_list("x^2 - y, y^3 - x", ring));
  IdealHandle J(ring, parse_polynomial_list("y^3 - x, x^2 - y", ring));
  CHECK(I.digest(ring->order("lex")) != I.digest(ring->order("degrevlex")));
  CHECK(I.digest(ring->order("lex")) == J.digest(ring->order("lex")));
}

TEST_CASE("disk cache round-trips, rejects stale entries, survives tampering") {
  CacheSandbox box;
  GbDiskCache cache(box.dir);
  RingPtr ring = RingSpec::make({"x", "y"}, 7);
  IdealHandle I(ring, parse_polynomial_list("x^2 - y, y^2 - x", ring));
  const TermOrderSpec& lex = ring->order("lex");
  const GroebnerBasis& gb = I.groebner(lex);
  std::string key = I.digest(lex);

  cache.store(key, ring, gb);
  REQUIRE(cache.enabled());
  auto loaded = cache.load(key, ring, lex);
  REQUIRE(loaded.has_value());
  REQUIRE(loaded->elements.size() == gb.elements.size());
  for (std::size_t i = 0; i < gb.elements.size(); ++i)
    CHECK(loaded->elements[i] == gb.elements[i]);

  // same key, different requested order: stale, treated as a miss
  CHECK_FALSE(cache.load(key, ring, ring->order("degrevlex")).has_value());

  // flip a byte: digest check fails, entry is a miss, cache stays enabled
  fs::path file = box.dir / (key + ".gb");
  std::string blob;
  {
    std::ifstream in(file, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    blob = buf.str();
  }
  blob[blob.size() / 2] ^= 0x01;
  std::ofstream(file, std::ios::binary | std::ios::trunc) << blob;
  CHECK_FALSE(cache.load(key, ring, lex).has_value());
  CHECK(cache.enabled());
}

TEST_CASE("installed cache serves warm Groebner runs from disk") {
  CacheSandbox box;
  auto cache = install_gb_disk_cache(box.dir);
  int hits = 0;
  auto inner = gb_cache_hooks().load;
  gb_cache_hooks().load = [&hits, inner](const std::string& key, const RingPtr& ring,
                                         const TermOrderSpec& order) {
    auto r = inner(key, ring, order);
    if (r) ++hits;
    return r;
  };

  RingPtr ring = RingSpec::make({"x", "y", "z"}, 0);
  auto gens = parse_polynomial_list("x*y - z^2, y^2 - x*z", ring);
  const TermOrderSpec& lex = ring->order("lex");

  IdealHandle cold(ring, gens);
  const GroebnerBasis& first = cold.groebner(lex);
  CHECK(hits == 0);  // nothing on disk yet

  IdealHandle warm(ring, gens);  // fresh handle: in-memory cache empty
  const GroebnerBasis& second = warm.groebner(lex);
  CHECK(hits == 1);
  REQUIRE(first.elements.size() == second.elements.size());
  for (std::size_t i = 0; i < first.elements.size(); ++i)
    CHECK(first.elements[i] == second.elements[i]);
}

TEST_CASE("write_report honors the output path and exit code") {
  CacheSandbox box;  // reuse the temp dir for a file target
  fs::create_directories(box.dir);
  fs::path out = box.dir / "report.json";

  Report rep = execute_job(gb_job());
  CHECK(write_report(rep, out.string()) == exit_ok);
  std::ifstream in(out);
  REQUIRE(in.good());
  json parsed = json::parse(in);
  CHECK(parsed["status"] == "ok");
  CHECK(parsed["payload"] == rep.payload);

  CHECK(write_report(rep, (box.dir / "nope" / "x.json").string()) == exit_input_error);
}
