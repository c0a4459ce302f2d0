#include "doctest.h"

#include "orbitkit/json_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(ORBITKIT_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  std::filesystem::path p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << content;
  return p;
}

}  // namespace

TEST_CASE("cli: mp prints both methods and exits 0") {
  RunResult r = run_cli("mp --preset S3 --prime 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("= 2 (lattice gcd) = 2 (closed form)") != std::string::npos);
}

TEST_CASE("cli: conlon example and a failing pair") {
  RunResult equal =
      run_cli("burnside conlon --preset S3 --prime 2 --x \"[G/1]+2[G/G]\" --y \"2[G/C2]+[G/C3]\"");
  CHECK(equal.exit_code == 0);
  RunResult different = run_cli("burnside conlon --preset S3 --prime 2 --x \"[G/G]\" --y \"[G/C3]\"");
  CHECK(different.exit_code == 1);
}

TEST_CASE("cli: realizable exit codes") {
  CHECK(run_cli("realizable --preset S3 --prime 2 --chi 2").exit_code == 1);
  CHECK(run_cli("realizable --preset S3 --prime 2 --chi 3").exit_code == 0);
  // p-power order group: precondition violated, usage error
  CHECK(run_cli("realizable --preset C4 --prime 2 --chi 1").exit_code == 2);
}

TEST_CASE("cli: burnside solve distinguishes image from non-image") {
  CHECK(run_cli("burnside solve --preset C2 --values 1,0").exit_code == 1);
  RunResult r = run_cli("burnside solve --preset S3 --values 0,0,0,2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("[G/1] - 2[G/C2] - [G/C3] + 2[G/G]") != std::string::npos);
}

TEST_CASE("cli: usage errors exit 2") {
  CHECK(run_cli("mp --preset S3").exit_code == 2);          // missing --prime
  CHECK(run_cli("mp --prime 2").exit_code == 2);            // missing group
  CHECK(run_cli("group lattice --preset Z9").exit_code == 2);
  CHECK(run_cli("nonsense").exit_code == 2);
}

TEST_CASE("cli: byte-identical output on repeated runs") {
  RunResult a = run_cli("group lattice --preset D4 --json");
  RunResult b = run_cli("group lattice --preset D4 --json");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  RunResult c = run_cli("marks --preset S4 --json");
  RunResult d = run_cli("marks --preset S4 --json");
  CHECK(c.out == d.out);
}

TEST_CASE("cli: group JSON files load") {
  auto path = temp_file("okit_group.json",
                        R"({"degree": 3, "generators": [[1,2,0],[1,0,2]]})");
  RunResult r = run_cli("group info --group " + path.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("order 6") != std::string::npos);
}

TEST_CASE("cli: simplicial pipeline round-trips through files") {
  auto tri = temp_file("okit_tri.json",
                       R"({"vertices": 3, "action": [[1,0,2],[1,2,0]],)"
                       R"( "simplices": [[0,1],[1,2],[0,2]]})");

  std::filesystem::path hex = std::filesystem::temp_directory_path() / "okit_hex.json";
  RunResult sd = run_cli("gcw sd --preset S3 --input " + tri.string() + " --json > " + hex.string());
  CHECK(sd.exit_code == 0);

  RunResult cls = run_cli("gcw class --preset S3 --input " + hex.string());
  CHECK(cls.exit_code == 0);
  CHECK(cls.out.find("-[G/1] + 2[G/C2]") != std::string::npos);

  std::filesystem::path chain = std::filesystem::temp_directory_path() / "okit_chain.json";
  RunResult ch =
      run_cli("gcw chain --preset S3 --input " + hex.string() + " --json > " + chain.string());
  CHECK(ch.exit_code == 0);

  // the emitted complex re-ingests losslessly
  RunResult hom = run_cli("complex homology --preset S3 --input " + chain.string());
  CHECK(hom.exit_code == 0);
  CHECK(hom.out.find("H_0: betti 1") != std::string::npos);
  CHECK(hom.out.find("H_1: betti 1") != std::string::npos);

  RunResult hom_fixed =
      run_cli("complex homology --preset S3 --subgroup C2 --input " + chain.string());
  CHECK(hom_fixed.exit_code == 0);
  CHECK(hom_fixed.out.find("H_0: betti 2") != std::string::npos);
}

TEST_CASE("cli: kw-check accepts the identity and rejects the zero map") {
  using namespace orbitkit;
  FiniteGroup g = group_preset("S", 3);
  SubgroupLattice lat = subgroup_lattice(g);
  ConcreteGSet three = coset_gset(g, lat.members[lat.class_rep[1]]);
  GSimplicialComplex hex = barycentric_subdivision(g, boundary_simplex(g, three));
  SpecialComplex chains = cellular_chain_complex(g, lat, hex, Ring::GF(2), false);
  Json body = complex_to_json(chains);

  Json doc;
  doc["ring"] = body["ring"];
  doc["source"] = body;
  doc["target"] = body;
  Json id_maps = Json::array();
  for (int i = 0; i <= chains.top(); ++i)
    id_maps.push_back(matrix_to_json(RatMatrix::identity(chains.dim(i))));
  doc["map"] = id_maps;
  auto idf = temp_file("okit_kw_id.json", doc.dump());
  CHECK(run_cli("complex kw-check --preset S3 --input " + idf.string()).exit_code == 0);

  Json zero_maps = Json::array();
  for (int i = 0; i <= chains.top(); ++i)
    zero_maps.push_back(matrix_to_json(RatMatrix(chains.dim(i), chains.dim(i))));
  doc["map"] = zero_maps;
  auto zf = temp_file("okit_kw_zero.json", doc.dump());
  RunResult r = run_cli("complex kw-check --preset S3 --input " + zf.string());
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("class 1") != std::string::npos);
  CHECK(r.out.find("degree 0") != std::string::npos);
}

TEST_CASE("cli: split-check certifies cones and rejects the swap") {
  auto swap = temp_file("okit_swap.json",
                        R"({"ring": "Z", "augmented": true,)"
                        R"( "bases": [{"orbits": ["1"]}], "boundaries": []})");
  RunResult bad = run_cli("complex split-check --preset C2 --input " + swap.string());
  CHECK(bad.exit_code == 1);

  auto tri = temp_file("okit_tri2.json",
                       R"({"vertices": 3, "action": [[1,0,2],[1,2,0]],)"
                       R"( "simplices": [[0,1],[1,2],[0,2]]})");
  std::filesystem::path hex = std::filesystem::temp_directory_path() / "okit_hex2.json";
  run_cli("gcw sd --preset S3 --input " + tri.string() + " --json > " + hex.string());
  std::filesystem::path conehex = std::filesystem::temp_directory_path() / "okit_cone2.json";
  run_cli("gcw cone --preset S3 --input " + hex.string() + " --json > " + conehex.string());
  std::filesystem::path chain = std::filesystem::temp_directory_path() / "okit_chain2.json";
  run_cli("gcw chain --preset S3 --augmented --input " + conehex.string() + " --json > " +
          chain.string());
  RunResult good = run_cli("complex split-check --preset S3 --input " + chain.string());
  CHECK(good.exit_code == 0);
  RunResult quot = run_cli("gcw quotient --preset S3 --input " + conehex.string());
  CHECK(quot.exit_code == 0);
  CHECK(quot.out.find("(acyclic)") != std::string::npos);
}
