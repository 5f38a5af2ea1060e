// Copyright 2026 The mgit Authors
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

#ifndef MGIT_TESTS_FIXTURES_H_
#define MGIT_TESTS_FIXTURES_H_

// Before/after sources of a refactoring that renames the class, the field
// and both accessors.

namespace mgit::testing {

inline constexpr char kPersonSource[] = R"(public class Person {
  private int length;

  public int getLength() {
    return length;
  }

  public void setLength(int length) {
    this.length = length;
  }
}
)";

inline constexpr char kEngineerSource[] = R"(public class Engineer {
  private int height;

  public int getHeight() {
    return height;
  }

  public void setHeight(int height) {
    this.height = height;
  }
}
)";

inline constexpr char kGetLength[] = "Person#public_int_getLength().mjava";
inline constexpr char kSetLength[] = "Person#public_void_setLength(int).mjava";
inline constexpr char kGetHeight[] = "Engineer#public_int_getHeight().mjava";
inline constexpr char kSetHeight[] = "Engineer#public_void_setHeight(int).mjava";

}  // namespace mgit::testing

#endif  // MGIT_TESTS_FIXTURES_H_
