#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <nlohmann/json.hpp>
#include <string>

namespace {

struct Outcome {
  int code = -1;
  std::string out;
};

Outcome run(const std::string& args) {
  std::string cmd = std::string(QDEFORM_CLI) + " " + args + " 2>&1";
  Outcome r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

void strip_timings(nlohmann::json& j) {
  if (j.is_object()) {
    j.erase("seconds");
    for (auto& [k, v] : j.items()) strip_timings(v);
  } else if (j.is_array()) {
    for (auto& v : j) strip_timings(v);
  }
}

}  // namespace

TEST(Cli, VerifyExitCodes) {
  EXPECT_EQ(run("verify --entry glq2 --check qybe").code, 0);
  Outcome tri = run("verify --entry glq2 --check triangular");
  EXPECT_EQ(tri.code, 1);
  EXPECT_NE(tri.out.find("fail"), std::string::npos);
  EXPECT_EQ(run("verify --entry nonexistent").code, 2);
  EXPECT_EQ(run("verify --entry glq2 --check nonsense").code, 2);
  EXPECT_EQ(run("verify --entry glq2 --check antipode --check cqybe").code, 1);
  EXPECT_EQ(run("verify --bogus-flag").code, 2);
  EXPECT_EQ(run("").code, 2);
}

TEST(Cli, VerifyJsonReport) {
  Outcome r = run("--json verify --entry glq2 --entry gmk");
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["command"], "verify");
  EXPECT_EQ(j["status"], "pass");
  ASSERT_EQ(j["entries"].size(), 2u);
  EXPECT_EQ(j["entries"][0]["entry"], "glq2");
  EXPECT_TRUE(j.contains("version"));
  for (const auto& c : j["entries"][1]["checks"]) EXPECT_EQ(c["status"], "pass");
}

TEST(Cli, ReportsAreDeterministic) {
  Outcome a = run("--json --jobs 2 verify --entry glq2 --entry grs --entry gl2_coloured_j");
  Outcome b = run("--json --jobs 1 verify --entry glq2 --entry grs --entry gl2_coloured_j");
  ASSERT_EQ(a.code, 0);
  auto ja = nlohmann::json::parse(a.out), jb = nlohmann::json::parse(b.out);
  strip_timings(ja);
  strip_timings(jb);
  EXPECT_EQ(ja.dump(), jb.dump());
}

TEST(Cli, Contract) {
  Outcome std_to_jordan = run("contract --source glq2 --eta 'h/(1-q)' --limit q=1");
  EXPECT_EQ(std_to_jordan.code, 0);
  EXPECT_NE(std_to_jordan.out.find("matches frozen glh2: pass"), std::string::npos);

  Outcome g = run("contract --source grs --transform G --eta 'm/(r-1)' --limit r=1");
  EXPECT_EQ(g.code, 0);
  EXPECT_NE(g.out.find("matches frozen gmk: pass"), std::string::npos);

  Outcome id = run("--json contract --source glq2 --eta 1 --limit q=1");
  ASSERT_EQ(id.code, 0);
  auto j = nlohmann::json::parse(id.out);
  const auto& e = j["definition"]["entries"];
  ASSERT_EQ(e.size(), 16u);
  for (std::size_t k = 0; k < 16; ++k) EXPECT_EQ(e[k], k % 5 == 0 ? "1" : "0");

  Outcome singular = run("contract --source glq2 --eta 'h/(1-q)^2' --limit q=1");
  EXPECT_EQ(singular.code, 1);
  EXPECT_NE(singular.out.find("does not exist"), std::string::npos);
}

TEST(Cli, Relations) {
  Outcome r = run("relations --entry glq2");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("6 relations, confluent"), std::string::npos);
  Outcome c = run("relations --entry grs_coloured");
  EXPECT_EQ(c.code, 0);
  EXPECT_NE(c.out.find("[1] f_s'.f_s + [-1] f_s.f_s' = 0"), std::string::npos);
  Outcome id = run("relations --entry identity4");
  EXPECT_EQ(id.code, 0);
  EXPECT_NE(id.out.find("[1] b.a + [-1] a.b = 0"), std::string::npos);
}

TEST(Cli, Hom) {
  EXPECT_EQ(run("hom --spec grs-to-glpq --N 1").code, 0);
  EXPECT_EQ(run("hom --spec gmk-to-glhh --N 3").code, 0);
  EXPECT_EQ(run("hom --spec grs-to-glpq --override p=r*s").code, 1);
  EXPECT_EQ(run("hom --spec glq2").code, 2);
}

TEST(Cli, Export) {
  Outcome r = run("export --entry glq2");
  EXPECT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["name"], "glq2");
  EXPECT_EQ(run("export --file /nonexistent.json").code, 2);
}
