from django.test import SimpleTestCase

from scheduler.workload import (
    TABLE1, ProcessSpec, Workload, WorkloadError, bundled_dataset, expand_dataset_ids,
    generate_workload, load_workload, parse_workload, workload_to_csv, workload_to_json,
)

TABLE1_CSV = 'P1,5,5\nP2,4,6\nP3,3,7\nP4,1,9\nP5,2,2\nP6,6,3'


class ParseWorkloadTests(SimpleTestCase):
    def test_illustration_rows_keep_file_order(self):
        workload = parse_workload(TABLE1_CSV, 'csv')
        self.assertEqual(workload, TABLE1)
        self.assertEqual([p.id for p in workload], ['P1', 'P2', 'P3', 'P4', 'P5', 'P6'])

    def test_single_process(self):
        workload = parse_workload('P1,0,1', 'csv')
        self.assertEqual(workload.processes, (ProcessSpec('P1', 0, 1),))

    def test_header_and_crlf_are_accepted(self):
        workload = parse_workload('id,arrival,burst\r\nP1,0,5\r\n\r\nP2,1,3\r\n', 'csv')
        self.assertEqual(len(workload), 2)
        self.assertEqual(workload.get('P2'), ProcessSpec('P2', 1, 3))

    def test_duplicate_id_reports_row(self):
        with self.assertRaises(WorkloadError) as ctx:
            parse_workload('P1,0,5\nP1,1,3', 'csv')
        self.assertEqual(ctx.exception.row, 2)
        self.assertEqual(ctx.exception.field, 'id')

    def test_duplicate_row_counts_header(self):
        with self.assertRaises(WorkloadError) as ctx:
            parse_workload('id,arrival,burst\nP1,0,5\nP1,1,3', 'csv')
        self.assertEqual(ctx.exception.row, 3)

    def test_negative_arrival(self):
        with self.assertRaises(WorkloadError) as ctx:
            parse_workload('P1,0,5\nP2,-1,3', 'csv')
        self.assertEqual((ctx.exception.row, ctx.exception.field), (2, 'arrival'))

    def test_non_integer_burst(self):
        with self.assertRaises(WorkloadError) as ctx:
            parse_workload('P1,0,2.5', 'csv')
        self.assertEqual((ctx.exception.row, ctx.exception.field), (1, 'burst'))

    def test_zero_burst(self):
        with self.assertRaises(WorkloadError) as ctx:
            parse_workload('P1,0,0', 'csv')
        self.assertEqual(ctx.exception.field, 'burst')

    def test_wrong_field_count(self):
        with self.assertRaises(WorkloadError) as ctx:
            parse_workload('P1,0', 'csv')
        self.assertEqual(ctx.exception.row, 1)

    def test_empty_dataset(self):
        for text, format in (('', 'csv'), ('id,arrival,burst\n', 'csv'), ('[]', 'json')):
            with self.subTest(text=text):
                with self.assertRaises(WorkloadError):
                    parse_workload(text, format)

    def test_json_objects(self):
        workload = parse_workload('[{"id": "A", "arrival": 0, "burst": 4}, {"id": "B", "arrival": 2, "burst": 1}]', 'json')
        self.assertEqual(workload.processes, (ProcessSpec('A', 0, 4), ProcessSpec('B', 2, 1)))

    def test_json_missing_key_and_bad_type(self):
        with self.assertRaises(WorkloadError) as ctx:
            parse_workload('[{"id": "A", "arrival": 0}]', 'json')
        self.assertEqual((ctx.exception.row, ctx.exception.field), (1, 'burst'))
        with self.assertRaises(WorkloadError) as ctx:
            parse_workload('[{"id": "A", "arrival": 0, "burst": 1}, {"id": "B", "arrival": 1.5, "burst": 1}]', 'json')
        self.assertEqual((ctx.exception.row, ctx.exception.field), (2, 'arrival'))

    def test_serializations_parse_back(self):
        workload = generate_workload(12, seed=5)
        self.assertEqual(parse_workload(workload_to_csv(workload), 'csv'), workload)
        self.assertEqual(parse_workload(workload_to_json(workload), 'json'), workload)

    def test_ids_with_inner_spaces_and_commas_parse_back(self):
        workload = Workload((ProcessSpec('job 1', 0, 3), ProcessSpec('a,b', 1, 2), ProcessSpec('"q"', 2, 1)))
        self.assertEqual(parse_workload(workload_to_csv(workload), 'csv'), workload)
        self.assertEqual(parse_workload(workload_to_json(workload), 'json'), workload)

    def test_surrounding_whitespace_in_id_is_rejected(self):
        for process_id in (' P1', 'P1 ', '\tP1', 'P1\n'):
            with self.subTest(process_id=process_id):
                with self.assertRaises(WorkloadError) as ctx:
                    ProcessSpec(process_id, 0, 1)
                self.assertEqual(ctx.exception.field, 'id')

    def test_parsed_ids_are_stripped(self):
        workload = parse_workload(' P1 ,0,2', 'csv')
        self.assertEqual(workload.processes, (ProcessSpec('P1', 0, 2),))


class GenerateWorkloadTests(SimpleTestCase):
    def test_ranges(self):
        workload = generate_workload(20, seed=42, arrival_max=40, burst_max=50)
        self.assertEqual(len(workload), 20)
        for p in workload:
            self.assertTrue(1 <= p.burst <= 50)
            self.assertTrue(0 <= p.arrival <= 40)

    def test_same_arguments_same_workload(self):
        first = generate_workload(20, seed=42, arrival_max=40, burst_max=50)
        second = generate_workload(20, seed=42, arrival_max=40, burst_max=50)
        self.assertEqual(workload_to_csv(first), workload_to_csv(second))
        self.assertNotEqual(first, generate_workload(20, seed=43, arrival_max=40, burst_max=50))

    def test_degenerate_ranges(self):
        workload = generate_workload(1, seed=0, arrival_max=0, burst_max=1)
        self.assertEqual(workload.processes, (ProcessSpec('P1', 0, 1),))

    def test_default_arrival_range(self):
        workload = generate_workload(5, seed=9)
        self.assertTrue(all(p.arrival <= 10 for p in workload))

    def test_zero_count_rejected(self):
        with self.assertRaises(WorkloadError):
            generate_workload(0, seed=1)


class BundledDatasetTests(SimpleTestCase):
    def test_table1(self):
        workload = bundled_dataset('table1')
        self.assertEqual(
            {p.id: (p.arrival, p.burst) for p in workload},
            {'P1': (5, 5), 'P2': (4, 6), 'P3': (3, 7), 'P4': (1, 9), 'P5': (2, 2), 'P6': (6, 3)},
        )

    def test_ds5_is_the_illustration(self):
        self.assertEqual(bundled_dataset('ds5'), TABLE1)

    def test_sizes(self):
        sizes = [len(bundled_dataset(f'ds{n}')) for n in range(1, 11)]
        self.assertEqual(sizes, [4, 5, 5, 6, 6, 10, 10, 15, 15, 20])

    def test_stand_ins_are_stable(self):
        self.assertEqual(bundled_dataset('ds10'), bundled_dataset('ds10'))

    def test_unknown_id(self):
        with self.assertRaises(WorkloadError):
            bundled_dataset('ds11')

    def test_non_string_id(self):
        for dataset_id in (['ds1'], {'id': 'ds1'}, 5, None):
            with self.subTest(dataset_id=dataset_id):
                with self.assertRaises(WorkloadError):
                    bundled_dataset(dataset_id)

    def test_range_expansion(self):
        self.assertEqual(expand_dataset_ids('table1, ds2..ds4'), ['table1', 'ds2', 'ds3', 'ds4'])
        with self.assertRaises(WorkloadError):
            expand_dataset_ids('ds4..ds2')

    def test_load_missing_file_is_os_error(self):
        with self.assertRaises(OSError):
            load_workload('does-not-exist.csv')

    def test_workload_rejects_duplicates_directly(self):
        with self.assertRaises(WorkloadError):
            Workload((ProcessSpec('A', 0, 1), ProcessSpec('A', 1, 1)))
