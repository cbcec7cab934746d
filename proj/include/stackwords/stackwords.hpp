#pragma once

#include "complexity.hpp"
#include "errors.hpp"
#include "factor_enum.hpp"
#include "report_io.hpp"
#include "sequences.hpp"
#include "verify.hpp"
#include "word.hpp"
#include "word_ops.hpp"
