#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "rnnids/dataset/flow.hpp"

namespace rnnids::dataset {

// JSON lines. The first line is the header:
//   {"format":"rnnids-dataset","version":1,"manifest":{...},
//    "benign_hosts":[...],"malicious_host_pool":[...]}
// followed by one flow per line:
//   {"ts":..,"proto":"tcp","src":"a.b.c.d","sport":..,"dst":..,"dport":..,
//    "label":"benign","origin":"benign","payload":"<base64>"}
// Keys are written sorted, so equal datasets serialize to equal bytes.
std::string serialize_dataset(const LabeledDataset& ds);
// Throws DatasetFormatError with the 1-based line number.
LabeledDataset parse_dataset(std::string_view text);

void write_dataset(const std::filesystem::path& path, const LabeledDataset& ds);
LabeledDataset read_dataset(const std::filesystem::path& path);

}  // namespace rnnids::dataset
