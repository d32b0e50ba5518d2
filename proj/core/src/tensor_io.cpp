#include "tenspect/tensor_io.hpp"

#include <fstream>

#include <json.hpp>

#include "tenspect/errors.hpp"

namespace tenspect {

using nlohmann::json;

std::string tensor_to_json(const DenseTensor& t) {
  json j;
  j["shape"] = t.shape().dims();
  std::vector<double> re(t.size()), im(t.size());
  bool any_imag = false;
  for (std::size_t i = 0; i < t.size(); ++i) {
    re[i] = t.flat()[i].real();
    im[i] = t.flat()[i].imag();
    any_imag |= im[i] != 0.0;
  }
  j["re"] = re;
  if (any_imag) j["im"] = im;
  return j.dump();
}

DenseTensor tensor_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ShapeError(std::string("tensor json: ") + e.what());
  }
  if (!j.is_object() || !j.contains("shape") || !j.contains("re")) {
    throw ShapeError("tensor json: object with \"shape\" and \"re\" required");
  }
  Shape shape{j.at("shape").get<std::vector<int>>()};
  const auto re = j.at("re").get<std::vector<double>>();
  if (re.size() != shape.size()) {
    throw ShapeError("tensor json: \"re\" length does not match shape");
  }
  std::vector<double> im(shape.size(), 0.0);
  if (j.contains("im")) {
    im = j.at("im").get<std::vector<double>>();
    if (im.size() != shape.size()) {
      throw ShapeError("tensor json: \"im\" length does not match shape");
    }
  }
  std::vector<Complex> entries(shape.size());
  for (std::size_t i = 0; i < entries.size(); ++i) entries[i] = {re[i], im[i]};
  return DenseTensor{std::move(shape), std::move(entries)};
}

void save_tensor(const std::string& path, const DenseTensor& t) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << tensor_to_json(t) << '\n';
}

DenseTensor load_tensor(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return tensor_from_json(text);
}

}  // namespace tenspect
