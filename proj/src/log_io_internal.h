//
// Copyright 2026 The dplog Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef DPLOG_SRC_LOG_IO_INTERNAL_H_
#define DPLOG_SRC_LOG_IO_INTERNAL_H_

#include <string>

#include "dplog/event_log.h"

namespace dplog::internal {

void AppendXes(const EventLog& log, std::string* out);
void AppendCsv(const EventLog& log, std::string* out);

}  // namespace dplog::internal

#endif  // DPLOG_SRC_LOG_IO_INTERNAL_H_
