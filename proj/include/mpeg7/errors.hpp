/*
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
you may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mpeg7 {

// Root of the library's error hierarchy.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unreadable, truncated or unsupported image file.
class DecodeError : public Error {
 public:
  using Error::Error;
};

// Input image smaller than the 8x8 minimum both extractors require.
class ImageTooSmall : public Error {
 public:
  using Error::Error;
};

// Descriptor operands of unequal or unexpected length.
class LengthMismatch : public Error {
 public:
  using Error::Error;
};

// A DescriptorRecord or SynsetFile violating its invariants.
class InvalidRecord : public Error {
 public:
  using Error::Error;
};

// Filesystem-level failure (open, write, rename, scan).
class IoError : public Error {
 public:
  using Error::Error;
};

// Descriptor file with an extension other than .cld/.ehd.
class ExtensionError : public Error {
 public:
  using Error::Error;
};

// Mixing CLD and EHD content where one kind is required.
class KindMismatch : public Error {
 public:
  using Error::Error;
};

// The same image_id appearing twice in an index.
class DuplicateId : public Error {
 public:
  using Error::Error;
};

// Query vector whose dimension does not match the index kind.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

enum class ParseReason {
  WrongDimension,
  MalformedField,
  DuplicateImageId,
};

inline const char* to_string(ParseReason reason) {
  switch (reason) {
    case ParseReason::WrongDimension: return "WrongDimension";
    case ParseReason::MalformedField: return "MalformedField";
    case ParseReason::DuplicateImageId: return "DuplicateImageId";
  }
  return "?";
}

// Malformed descriptor line; carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, ParseReason reason, const std::string& detail)
      : Error("line " + std::to_string(line) + ": " + to_string(reason) +
              ": " + detail),
        line_(line),
        reason_(reason) {}

  std::size_t line() const { return line_; }
  ParseReason reason() const { return reason_; }

 private:
  std::size_t line_;
  ParseReason reason_;
};

}  // namespace mpeg7
