#ifndef QWALK_QWALK_H
#define QWALK_QWALK_H

/* C API for the walk-based computation library. All functions returning int
 * give an error code (QW_OK on success); functions returning pointers give
 * NULL on failure. qw_error_message() describes the most recent failure on
 * the calling thread. Strings returned by the library are heap-allocated and
 * must be released with qw_string_free(). */

#ifdef __cplusplus
extern "C" {
#endif

enum {
    QW_OK = 0,
    QW_ERR_INVALID_ARGUMENT = 1,
    QW_ERR_PARSE = 2,
    QW_ERR_INTERNAL = 3
};

typedef struct qw_layout qw_layout;
typedef struct qw_state qw_state;
typedef struct qw_program qw_program;

const char* qw_error_message(void);
void qw_string_free(char* s);

/* layout: n_qubits >= 2; convention is "gray" or "binary" */
qw_layout* qw_layout_new(int n_qubits, const char* convention);
void qw_layout_free(qw_layout* lay);
int qw_layout_n_qubits(const qw_layout* lay);

/* states start at |0...0> */
qw_state* qw_state_new(const qw_layout* lay);
void qw_state_free(qw_state* st);
int qw_state_apply(qw_state* st, const qw_program* prog);
/* JSON object: bit string -> probability (entries below 1e-12 omitted) */
char* qw_state_probabilities_json(const qw_state* st);

/* gate_lines: newline-separated "H 2", "P 3 0.785...", "CNOT 1 4", "X 2",
 * "Z 3", "GPHASE 0.5"; backend is "main" or "alt" */
int qw_program_compile_gates(const qw_layout* lay, const char* gate_lines,
                             const char* backend, qw_program** out);
qw_program* qw_program_parse(const char* text);
char* qw_program_text(const qw_program* prog);
int qw_program_length(const qw_program* prog);
/* walk time steps under the calibrated fusion convention */
int qw_program_steps(const qw_program* prog);
void qw_program_free(qw_program* prog);

/* JSON reports. Where a pass flag applies it is also stored in *pass
 * (0/1) so callers can set exit codes without parsing the JSON. */
char* qw_report_verify_gates(int n, const char* backend, const char* convention, int* pass);
char* qw_report_grover(const char* target, int iterations, const char* convention, int* pass);
char* qw_report_qft3(int input, const char* convention, int* pass);
char* qw_report_qpe(double phi, const char* convention, int* pass);
char* qw_report_qec(const char* code, const char* convention, int* pass);
char* qw_report_cost(const char* artifact, const char* model, const char* convention);
/* all recorded literal-reading discrepancies across the modules */
char* qw_report_discrepancies(void);

#ifdef __cplusplus
}
#endif

#endif /* QWALK_QWALK_H */
