#pragma once

// Data files compiled into the library (generated at configure time).

namespace w0::embedded {

const char* realforms_json();
const char* golden_tables_json();

}  // namespace w0::embedded
