import json
import logging

from django.conf import settings
from django.http import HttpResponse, JsonResponse
from django.shortcuts import get_object_or_404
from django.views.decorators.csrf import csrf_exempt
from django.views.decorators.http import require_http_methods

from .engine import GanttSegment, Schedule
from .metrics import run_simulation
from .models import SimulationRun, store_run
from .policies import parse_policy
from .report import SVG, render_gantt, result_document
from .workload import WorkloadError, as_rows, bundled_dataset, parse_workload

logger = logging.getLogger(__name__)


def _workload_from(data):
    label = data.get('dataset', 'custom')
    if not isinstance(label, str):
        raise WorkloadError('"dataset" must be a string')
    if 'processes' in data:
        return label, parse_workload(json.dumps(data['processes']), 'json')
    if 'dataset' in data:
        return label, bundled_dataset(label)
    raise WorkloadError('provide either "processes" or a bundled "dataset"')


# API Endpoints
@csrf_exempt
@require_http_methods(["POST"])
def simulate_view(request):
    """Simulate a posted or bundled workload under one policy"""
    try:
        data = json.loads(request.body)
        if not isinstance(data, dict):
            raise WorkloadError('expected a JSON object')
        label, workload = _workload_from(data)
        defaults = settings.SCHEDULER
        config = parse_policy(
            data.get('policy', 'drq'),
            quantum=data.get('quantum', defaults['DEFAULT_QUANTUM']),
            threshold=data.get('threshold', defaults['DEFAULT_THRESHOLD']),
            drq_mode=data.get('drq_mode', defaults['DEFAULT_DRQ_MODE']),
            trq_mode=data.get('trq_mode', defaults['DEFAULT_TRQ_MODE']),
        )
        result = run_simulation(workload, config, dataset=label)

        response = {'success': True, 'result': result_document(result)}
        if data.get('save'):
            run = store_run(result)
            response['run_id'] = str(run.id)
        return JsonResponse(response)

    except json.JSONDecodeError:
        return JsonResponse({
            'success': False,
            'message': 'Invalid JSON body'
        }, status=400)
    except ValueError as e:
        logger.info('rejected simulation request: %s', e)
        return JsonResponse({
            'success': False,
            'message': str(e)
        }, status=400)


@require_http_methods(["GET"])
def dataset_view(request, dataset_id):
    """Bundled dataset as JSON"""
    try:
        workload = bundled_dataset(dataset_id)
    except WorkloadError as e:
        return JsonResponse({
            'success': False,
            'message': str(e)
        }, status=404)
    return JsonResponse({
        'success': True,
        'dataset': dataset_id,
        'processes': as_rows(workload),
    })


@require_http_methods(["GET"])
def runs_view(request):
    """Most recent stored simulation runs"""
    runs = SimulationRun.objects.all()[:50]
    return JsonResponse({
        'success': True,
        'runs': [
            {
                'id': str(run.id),
                'dataset': run.dataset,
                'policy': run.policy,
                'avg_tat': str(run.avg_turnaround),
                'avg_wt': str(run.avg_waiting),
                'ncs': run.context_switches,
                'makespan': run.makespan,
                'created_at': run.created_at.isoformat(),
            }
            for run in runs
        ],
    })


@require_http_methods(["GET"])
def run_gantt_view(request, run_id):
    """Stored run rendered as an SVG Gantt chart"""
    run = get_object_or_404(SimulationRun, id=run_id)
    schedule = Schedule(tuple(GanttSegment(*segment) for segment in run.gantt))
    svg = render_gantt(schedule, SVG, scale=settings.SCHEDULER['GANTT_SCALE'], title=str(run))
    return HttpResponse(svg, content_type='image/svg+xml')
