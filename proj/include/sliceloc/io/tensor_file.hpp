#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "sliceloc/nn/tensor.hpp"

namespace sliceloc::io {

// Layout (all little-endian):
//   'M' 'P' 'T' '1' | u8 dtype | u8 ndim | 2 zero bytes | ndim × u64 dims | payload
enum class DType : std::uint8_t { Float32 = 1, UInt16 = 2 };

inline constexpr std::uint32_t kTensorHeaderFixed = 8;

std::vector<std::uint8_t> encode_tensor(const nn::Tensor& tensor);
std::vector<std::uint8_t> encode_tensor_u16(const nn::Dims& dims,
                                            std::span<const std::uint16_t> values);

/// Decodes either dtype; 16-bit payloads are widened to float. `source`
/// names the origin in ParseError messages.
nn::Tensor decode_tensor(std::span<const std::uint8_t> bytes, const std::string& source);

void save_tensor(const std::filesystem::path& path, const nn::Tensor& tensor);
nn::Tensor load_tensor(const std::filesystem::path& path);

// Byte-level helpers shared by the other file formats.
std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);
void write_text(const std::filesystem::path& path, const std::string& text);
std::string read_text(const std::filesystem::path& path);

}  // namespace sliceloc::io
