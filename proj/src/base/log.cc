// adaptkit/base/log.cc

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "adaptkit/base/log.h"

#include <iostream>

namespace adaptkit {

namespace {
WarningHandler &CurrentHandler() {
  static WarningHandler handler;
  return handler;
}
}  // namespace

void Warn(const std::string &msg) {
  WarningHandler &h = CurrentHandler();
  if (h) {
    h(msg);
  } else {
    std::cerr << "WARNING (adaptkit): " << msg << std::endl;
  }
}

WarningHandler SetWarningHandler(WarningHandler handler) {
  WarningHandler previous = CurrentHandler();
  CurrentHandler() = std::move(handler);
  return previous;
}

void LogInfo(const std::string &msg) {
  std::cerr << "LOG (adaptkit): " << msg << std::endl;
}

}  // namespace adaptkit
