#pragma once

#include <memory>
#include <string>

#include "doctest.h"
#include "pushpull/error.hpp"
#include "pushpull/qw.hpp"
#include "pushpull/rootdata.hpp"

namespace testing {

inline std::shared_ptr<const pushpull::WeylGroup> weyl(const std::string& type,
                                                      const std::string& lattice = "sc") {
  using namespace pushpull;
  return std::make_shared<WeylGroup>(RootDatum::create(CartanType::parse(type), LatticeSpec::parse(lattice)));
}

inline std::shared_ptr<const pushpull::QWContext> qw(const std::string& type, const std::string& lattice,
                                                     pushpull::FormalGroupLaw fgl) {
  using namespace pushpull;
  auto fga = std::make_shared<FGAContext>(weyl(type, lattice), std::move(fgl));
  return std::make_shared<QWContext>(fga);
}

template <class F>
pushpull::ErrorCode error_of(F&& f) {
  try {
    f();
  } catch (const pushpull::Error& e) {
    return e.code();
  }
  FAIL("no pushpull::Error thrown");
  return pushpull::ErrorCode::InvalidArgument;
}

}  // namespace testing
