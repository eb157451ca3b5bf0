////////////////////////////////////////////////////////////////////////////////
//                                                                            //
//  This file is part of besselkit                                            //
//                                                                            //
//  Copyright 2026 besselkit developers                                       //
//                                                                            //
//  Licensed under the Apache License, Version 2.0 (the "License");           //
//  you may not use this file except in compliance with the License.          //
//  You may obtain a copy of the License at                                   //
//                                                                            //
//      http://www.apache.org/licenses/LICENSE-2.0                            //
//                                                                            //
//  Unless required by applicable law or agreed to in writing, software       //
//  distributed under the License is distributed on an "AS IS" BASIS,         //
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.  //
//  See the License for the specific language governing permissions and       //
//  limitations under the License.                                            //
//                                                                            //
////////////////////////////////////////////////////////////////////////////////

#include "doctest.h"

#include "json.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace fs = std::filesystem;

namespace {

  struct Run {
    int code;
    std::string out;
  };

  Run run(const std::string& args)
  {
    std::string cmd = std::string(BK_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    int st = pclose(p);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
  }

  fs::path scratch(const std::string& name, const std::string& content)
  {
    fs::path p = fs::temp_directory_path() / ("besselkit_cli_" + std::to_string(::getpid()) + "_" + name);
    std::ofstream(p) << content;
    return p;
  }

}

TEST_CASE("list")
{
  Run r = run("list");
  CHECK(r.code == 0);
  CHECK(r.out.find("I-2.32") != std::string::npos);
  Run j = run("list --json");
  CHECK(j.code == 0);
  CHECK(nlohmann::json::parse(j.out).size() >= 25);
  CHECK(run("list --format csv").code == 0);
  CHECK(run("list --format json --json").code == 0);
  CHECK(run("list --format text --json").code == 3);
  CHECK(nlohmann::json::parse(run("list --json --difficulty hard").out).size() == 2);
}

TEST_CASE("eval")
{
  Run r = run("eval bessel_k 0.5 1");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("0.461068504447895\n", 0) == 0);
  Run g = run("eval gamma 5");
  CHECK(g.out.rfind("24\n", 0) == 0);
  Run j = run("eval bessel_j 0 2.5 --json");
  auto js = nlohmann::json::parse(j.out);
  CHECK(js["converged"] == true);
  CHECK(std::fabs(js["value"].get<double>() + 0.048383776468197996) < 1e-15);
  CHECK(run("eval bessel_k 0.5 -1").code == 4);
  CHECK(run("eval bessel_k 0.5").code == 3);
  CHECK(run("eval bessel_k 0.5 abc").code == 3);
  CHECK(run("eval not_a_function 1").code == 2);
}

TEST_CASE("verify exit codes")
{
  Run ok = run("verify I-2.32");
  CHECK(ok.code == 0);
  CHECK(ok.out.find("summary: 27 pass, 0 fail, 0 inconclusive") != std::string::npos);

  CHECK(run("verify I-0.0").code == 2);
  CHECK(run("verify I-2.32 --tol 0").code == 3);
  CHECK(run("verify I-2.32 --tol -1").code == 3);
  CHECK(run("verify I-2.32 --jobs 0").code == 3);
  CHECK(run("verify I-2.32 --format yaml").code == 3);
  CHECK(run("verify I-2.32 --bogus").code == 3);
  CHECK(run("verify").code == 3);
  CHECK(run("frobnicate").code == 3);

  // a tolerance below the attainable accuracy produces fail entries
  CHECK(run("verify I-2.19 --tol 1e-18").code == 1);

  // fault injection: starved budgets give inconclusive entries, which only --strict treats as failure
  Run starved = run("verify I-2.30 --max-terms 2 --json");
  CHECK(starved.code == 0);
  auto js = nlohmann::json::parse(starved.out);
  CHECK(js["summary"]["inconclusive"].get<int>() > 0);
  CHECK(js["summary"]["fail"].get<int>() == 0);
  CHECK(run("verify I-2.30 --max-terms 2 --strict").code == 1);
  CHECK(run("verify I-2.12 --max-cells 3 --strict").code == 1);
}

TEST_CASE("verify with grid files and output files")
{
  fs::path good = scratch("good.csv", "nu,a,b,p\n0,1,1,1\n0.5,2,1,0.5\n");
  fs::path bad = scratch("bad.csv", "nu,a,b,p\n0,1,1,1\n0,1,1,-3\n");
  fs::path junk = scratch("junk.csv", "nu,a,b,p\n0,1,one,1\n");
  fs::path out = fs::temp_directory_path() / ("besselkit_cli_" + std::to_string(::getpid()) + "_out.json");

  Run r = run("verify I-2.32 --grid " + good.string() + " --json --out " + out.string());
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(out);
  auto js = nlohmann::json::parse(in);
  CHECK(js["entries"].size() == 2);
  CHECK(js["summary"]["pass"] == 2);

  CHECK(run("verify I-2.32 --grid " + bad.string()).code == 4);
  CHECK(run("verify I-2.32 --grid " + junk.string()).code == 3);
  CHECK(run("verify I-2.32 --grid /nonexistent/grid.csv").code == 3);
  CHECK(run("verify all --grid " + good.string()).code == 3);
  CHECK(run("verify I-2.32 --format csv").out.rfind("id,params,", 0) == 0);

  for (const auto& p : {good, bad, junk, out}) fs::remove(p);
}

TEST_CASE("version flag")
{
  Run r = run("--version");
  CHECK(r.code == 0);
  CHECK(r.out.find("1.0.0") != std::string::npos);
}
