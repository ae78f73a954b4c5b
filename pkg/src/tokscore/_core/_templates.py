import os

from copy import deepcopy
from functools import lru_cache

from ruamel.yaml import YAML

_TEMPLATES = os.path.dirname(os.path.dirname(__file__)) + '/templates/'


def templates(file: str | int = None) -> None:
    """
    Print packaged default templates.

    If no input, a list of available templates will print. Otherwise, given
    a file name or index, a template will print.

    Parameters
    ----------
    file : str | int, optional
        File name or index. The ``.yaml`` extension is optional. The default
        is None.

    Returns
    -------
    None.

    Raises
    ------
    FileNotFoundError
        'file' is not a packaged template.

    """

    names = sorted(os.listdir(_TEMPLATES))

    if file is None:

        print('='*30, 'tokscore templates:', '='*30, sep='\n')
        for i, f in enumerate(names):
            print('  - [' + str(i) + '] ' + f.removesuffix('.yaml'))

        return

    elif isinstance(file, str):
        file = file if '.yaml' in file else file + '.yaml'

    elif isinstance(file, int):
        file = names[file]

    if file not in names:
        raise FileNotFoundError(f"{file=} is not a packaged template.")

    print('='*30, file, '='*30, sep='\n')
    with open(_TEMPLATES + file, 'r') as f:
        print(f.read())


def defaults(name: str) -> dict:
    """
    Return the parsed contents of a packaged template.

    Parameters
    ----------
    name : str
        Template name, e.g., 'metrics'. The ``.yaml`` extension is optional.

    Returns
    -------
    values : dict
        A fresh copy of the template mapping. Editing it does not change the
        packaged defaults seen by later calls.

    Raises
    ------
    FileNotFoundError
        'name' is not a packaged template.

    """
    return deepcopy(_load(name.removesuffix('.yaml')))


@lru_cache(maxsize=None)
def _load(name: str) -> dict:
    path = _TEMPLATES + name + '.yaml'
    if not os.path.exists(path):
        raise FileNotFoundError(f"{name=} is not a packaged template.")

    yaml = YAML(typ='safe')
    with open(path, 'r') as f:
        return yaml.load(f)
