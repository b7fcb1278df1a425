// adaptkit/base/log.h

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

#ifndef ADAPTKIT_BASE_LOG_H_
#define ADAPTKIT_BASE_LOG_H_

#include <functional>
#include <string>

namespace adaptkit {

using WarningHandler = std::function<void(const std::string &)>;

// Non-fatal diagnostics (empty-component resplits, LDA regularization,
// single-utterance partitions) go through this channel.  Default handler
// writes "WARNING (adaptkit): ..." to stderr; tests may install a collector.
void Warn(const std::string &msg);

// Returns the previous handler.  Pass nullptr to restore the default.
WarningHandler SetWarningHandler(WarningHandler handler);

void LogInfo(const std::string &msg);

}  // namespace adaptkit

#endif  // ADAPTKIT_BASE_LOG_H_
