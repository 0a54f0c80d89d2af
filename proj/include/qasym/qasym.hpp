#pragma once

#include "qasym/asymmetry.hpp"
#include "qasym/closed_forms.hpp"
#include "qasym/dense_operator.hpp"
#include "qasym/errors.hpp"
#include "qasym/generator_set.hpp"
#include "qasym/geometry.hpp"
#include "qasym/models/chain.hpp"
#include "qasym/models/convention.hpp"
#include "qasym/models/coproduct.hpp"
#include "qasym/models/fock.hpp"
#include "qasym/operator.hpp"
#include "qasym/q_number.hpp"
#include "qasym/site_matrix.hpp"
#include "qasym/tensor_operator.hpp"
#include "qasym/verify.hpp"
