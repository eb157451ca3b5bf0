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

#include "besselkit/besselkit.h"

#include "json.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>
#include <thread>

namespace {

  std::string take(char* s)
  {
    std::string out = s ? s : "";
    bk_string_free(s);
    return out;
  }

}

TEST_CASE("version and manifest")
{
  CHECK(std::string(bk_version()) == "1.0.0");
  CHECK(bk_identity_count() >= 25);
  const char* id = nullptr;
  CHECK(bk_identity_id(0, &id) == BK_OK);
  CHECK(id != nullptr);
  CHECK(bk_identity_id(100000, &id) == BK_ERR_ARGUMENT);
  int exists = 0;
  CHECK(bk_identity_exists("I-2.32", &exists) == BK_OK);
  CHECK(exists == 1);
  CHECK(bk_identity_exists("I-0", &exists) == BK_OK);
  CHECK(exists == 0);

  char* text = nullptr;
  REQUIRE(bk_manifest("json", nullptr, &text) == BK_OK);
  auto j = nlohmann::json::parse(take(text));
  CHECK(j.size() == bk_identity_count());
  CHECK(bk_manifest("json", "impossible", &text) == BK_ERR_ARGUMENT);
  CHECK(std::string(bk_last_error()).find("impossible") != std::string::npos);
  CHECK(bk_manifest("yaml", nullptr, &text) == BK_ERR_ARGUMENT);
}

TEST_CASE("kernel evaluation")
{
  bk_eval_result r{};
  double args[] = {0.5, 1.0};
  REQUIRE(bk_eval("bessel_k", args, 2, &r) == BK_OK);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", r.value);
  CHECK(std::string(buf) == "0.461068504447895");
  CHECK(r.converged == 1);
  CHECK(r.abs_err > 0);

  double g[] = {5.0};
  REQUIRE(bk_eval("gamma", g, 1, &r) == BK_OK);
  CHECK(r.value == 24.0);

  CHECK(bk_eval("bessel_q", args, 2, &r) == BK_ERR_UNKNOWN);
  CHECK(bk_eval("bessel_k", args, 1, &r) == BK_ERR_ARGUMENT);
  double bad[] = {0.0, -1.0};
  CHECK(bk_eval("bessel_k", bad, 2, &r) == BK_ERR_DOMAIN);
  double big[] = {0.0, 900.0};
  CHECK(bk_eval("bessel_i", big, 2, &r) == BK_ERR_OVERFLOW);
  double pole[] = {-2.0};
  CHECK(bk_eval("gamma", pole, 1, &r) == BK_ERR_DOMAIN);
  double wt[] = {1, 1, 1, 1};
  REQUIRE(bk_eval("weber_triple", wt, 4, &r) == BK_OK);
  CHECK(std::fabs(r.value - 0.5519869912205478) < 1e-14);
  CHECK(std::string(bk_eval_names()).find("hyp0f3") != std::string::npos);
}

TEST_CASE("verification through the C interface")
{
  bk_verify_options opt;
  bk_verify_options_init(&opt);
  opt.jobs = 2;
  bk_report* rep = nullptr;
  REQUIRE(bk_verify("I-2.32", nullptr, &opt, &rep) == BK_OK);
  size_t p = 0, f = 0, i = 0;
  CHECK(bk_report_counts(rep, &p, &f, &i) == BK_OK);
  CHECK(p == 27);
  CHECK(f == 0);
  char* js = nullptr;
  REQUIRE(bk_report_serialize(rep, "json", &js) == BK_OK);
  std::string json = take(js);
  bk_report_free(rep);

  bk_report* back = nullptr;
  REQUIRE(bk_report_parse_json(json.c_str(), &back) == BK_OK);
  REQUIRE(bk_report_serialize(back, "json", &js) == BK_OK);
  CHECK(take(js) == json);
  bk_report_free(back);

  CHECK(bk_report_parse_json("{not json", &back) == BK_ERR_ARGUMENT);
}

TEST_CASE("grid text, unknown ids and bad options")
{
  bk_report* rep = nullptr;
  REQUIRE(bk_verify("I-3.22", "a\n0.2\n0.6\n", nullptr, &rep) == BK_OK);
  size_t p = 0;
  bk_report_counts(rep, &p, nullptr, nullptr);
  CHECK(p == 2);
  bk_report_free(rep);

  CHECK(bk_verify("I-3.22", "a\n1.2\n", nullptr, &rep) == BK_ERR_DOMAIN);
  CHECK(std::string(bk_last_error()).find("line 2") != std::string::npos);
  CHECK(bk_verify("I-3.22", "b\n0.2\n", nullptr, &rep) == BK_ERR_ARGUMENT);
  CHECK(bk_verify("I-7.77", nullptr, nullptr, &rep) == BK_ERR_UNKNOWN);
  CHECK(bk_verify("all", "a\n0.2\n", nullptr, &rep) == BK_ERR_ARGUMENT);
  bk_verify_options opt;
  bk_verify_options_init(&opt);
  opt.jobs = 0;
  CHECK(bk_verify("I-3.22", nullptr, &opt, &rep) == BK_ERR_ARGUMENT);
  opt.jobs = 1;
  opt.rel_tol = -1;
  CHECK(bk_verify("I-3.22", nullptr, &opt, &rep) == BK_ERR_ARGUMENT);
}

TEST_CASE("last error is per thread")
{
  bk_eval_result r{};
  CHECK(bk_eval("nope", nullptr, 0, &r) == BK_ERR_UNKNOWN);
  std::string other;
  std::thread t([&] { other = bk_last_error(); });
  t.join();
  CHECK(other.empty());
  CHECK(std::string(bk_last_error()).find("nope") != std::string::npos);
}
