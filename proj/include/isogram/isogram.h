/*
   Copyright 2026 The isogram authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/* C interface of the isogram shared library. All computations run behind
 * opaque handles; results come back as JSON strings owned by a result
 * handle. Every entry point returns a status code; isg_last_error() gives
 * the message for the most recent failure on the calling thread. */

#ifndef ISOGRAM_H
#define ISOGRAM_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum isg_status {
  ISG_OK = 0,
  ISG_ERR_ARGUMENT = 1,   /* invalid parameter or configuration */
  ISG_ERR_STATE = 2,      /* missing file, unreachable precondition, ... */
  ISG_ERR_INTERNAL = 3
} isg_status;

typedef struct isg_engine isg_engine;  /* configuration + RNG policy */
typedef struct isg_result isg_result;  /* owns a JSON document */

/* config_json may be NULL for defaults. Recognized keys:
 *   "prime", "prime2" (decimal strings or integers), "seed", "trials". */
isg_status isg_engine_new(const char* config_json, isg_engine** out);
void isg_engine_free(isg_engine* eng);

const char* isg_version(void);
/* Message for the last failing call on this thread (empty if none). */
const char* isg_last_error(void);

const char* isg_result_json(const isg_result* res);
void isg_result_free(isg_result* res);

/* ---- closed-form census and symbolic minors ---- */

/* dimension, expected degree, component count, variable counts for (k,n,r) */
isg_status isg_gram_formulas(isg_engine* eng, int k, int n, int r, isg_result** out);

/* census of size x size minors of the block-zero matrix; when
 * include_polynomials is nonzero the canonical text of each minor is
 * included (keep size small for that). */
isg_status isg_gram_minors(isg_engine* eng, int k, int n, int size,
                           int include_polynomials, isg_result** out);

/* rank of the minor evaluation matrix over both configured primes */
isg_status isg_gram_span_dim(isg_engine* eng, int k, int n, int size,
                             isg_result** out);

/* `count` random minor identities on a generic symmetric m x m matrix */
isg_status isg_gram_plucker(isg_engine* eng, int m, int size, int count,
                            isg_result** out);

/* ---- parametrized samples ----
 * kind: "nullcone" | "spinor" | "isotropic" | "segre" | "hadamard" */
isg_status isg_sample(isg_engine* eng, const char* kind, int k, int n, int r,
                      int count, isg_result** out);

/* ---- dimension scans ----
 * target: "gram" | "phv" | "twopoint" */
isg_status isg_dim(isg_engine* eng, const char* target, int k, int n, int r,
                   isg_result** out);
isg_status isg_dim_conjecture(isg_engine* eng, int n_max, isg_result** out);

/* ---- interpolation pipeline ---- */

/* scan all achievable multidegrees with z-degree <= zmax; the ledger file
 * is created or extended (line-delimited JSON) when a path is given */
isg_status isg_interp_scan(isg_engine* eng, int n, int r, int zmax,
                           const char* ledger_path, isg_result** out);

/* scan one multidegree (e and f are arrays of length n) */
isg_status isg_interp_degree(isg_engine* eng, int n, int r, const int* e,
                             const int* f, const char* ledger_path,
                             isg_result** out);

/* lift the stored generators of a ledger to rational coefficients */
isg_status isg_interp_lift(isg_engine* eng, const char* ledger_path,
                           isg_result** out);

/* ---- verification driver ----
 * suite: plucker | census | table1 | dims | twopoint | lemma54 | lemma55 |
 *        lemma56 | fixtures | components | all
 * opts_json may be NULL; recognized keys: "heavy" (bool), "col" ([k,n]). */
isg_status isg_verify(isg_engine* eng, const char* suite, const char* opts_json,
                      isg_result** out);

#ifdef __cplusplus
}
#endif

#endif /* ISOGRAM_H */
