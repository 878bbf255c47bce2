#pragma once

#include "blockcert/bounds.hpp"
#include "blockcert/block.hpp"
#include "blockcert/certificate.hpp"
#include "blockcert/decompose.hpp"
#include "blockcert/errors.hpp"
#include "blockcert/hilbert.hpp"
#include "blockcert/index_set.hpp"
#include "blockcert/json_io.hpp"
#include "blockcert/lemmas.hpp"
#include "blockcert/monomial.hpp"
#include "blockcert/normal_form.hpp"
#include "blockcert/poly_io.hpp"
#include "blockcert/polynomial.hpp"
#include "blockcert/rational.hpp"
#include "blockcert/suites.hpp"
#include "blockcert/verify.hpp"
