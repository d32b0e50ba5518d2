#pragma once

#include <string>

#include "tenspect/tensor.hpp"

namespace tenspect {

/// Shared JSON tensor format:
///
///   { "shape": [d1, ..., dn],
///     "re":    [flat row-major real parts],
///     "im":    [flat row-major imaginary parts]  (optional, defaults to 0) }
///
/// Serialization is round-trip exact for every double-representable value.
std::string tensor_to_json(const DenseTensor& t);
DenseTensor tensor_from_json(const std::string& text);

void save_tensor(const std::string& path, const DenseTensor& t);
DenseTensor load_tensor(const std::string& path);

}  // namespace tenspect
