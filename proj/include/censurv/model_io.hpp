#ifndef CENSURV_MODEL_IO_HPP
#define CENSURV_MODEL_IO_HPP

#include <string>

#include "censurv/cnb.hpp"
#include "censurv/cox.hpp"

namespace censurv {

inline constexpr int model_document_version = 1;

/// Versioned, type-tagged JSON documents. Doubles are emitted in shortest
/// round-trip form, so a save/load cycle reproduces every stored value
/// bit-exactly and predictions are unchanged.
std::string serialize_model(const CnbModel& model);
std::string serialize_model(const CoxModel& model);

/// "cnb" or "cox"; throws FormatError naming the offending field.
std::string model_document_type(const std::string& document);

CnbModel deserialize_cnb(const std::string& document);
CoxModel deserialize_cox(const std::string& document);

}  // namespace censurv

#endif
