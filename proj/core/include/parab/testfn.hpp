#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "parab/domain_u.hpp"
#include "parab/solid_v.hpp"
#include "parab/surface_v0.hpp"

namespace parab {

struct TestFunctionInfo {
  std::string id;
  std::string domains;
  std::string description;
};

// Built-in test functions; "basis:<domain>:..." ids select basis elements.
std::vector<TestFunctionInfo> list_test_functions();

std::function<double(const UPoint&)> test_function_u(const std::string& id, const WeightU& w);
std::function<double(const SurfacePoint&)> test_function_v0(const std::string& id,
                                                            const WeightV0& w);
std::function<double(const SolidPoint&)> test_function_v(const std::string& id, const WeightV& w,
                                                         std::shared_ptr<const BallBasis> basis);

}  // namespace parab
